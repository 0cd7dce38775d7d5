use crate::{EmbeddedLattice, GramLattice, LatticeError};

/// A parsed lattice file: either an embedded basis or a bare Gram matrix.
pub enum ParsedLattice {
    Embedded(EmbeddedLattice),
    Gram(GramLattice),
}

/// Parses the lattice text format. Embedded form:
///
/// ```text
/// 2 2      # ambient rank, lattice rank
/// 2 1      # first basis column
/// 0 2      # second basis column
/// ```
///
/// Gram-only form starts with `gram r` followed by the r x r matrix.
/// `#` starts a comment.
pub fn parse_lattice_text(input: &str) -> Result<ParsedLattice, LatticeError> {
    let lines: Vec<Vec<&str>> = input
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.split_whitespace().collect())
        .collect();
    let Some(header) = lines.first() else {
        return Err(LatticeError::Parse("empty lattice file".into()));
    };
    let parse_row = |row: &[&str], expect: usize, what: &str| -> Result<Vec<i64>, LatticeError> {
        if row.len() != expect {
            return Err(LatticeError::Parse(format!(
                "{what}: expected {expect} entries, got {}",
                row.len()
            )));
        }
        row.iter()
            .map(|t| {
                t.parse()
                    .map_err(|_| LatticeError::Parse(format!("bad integer `{t}`")))
            })
            .collect()
    };
    if header[0] == "gram" {
        if header.len() != 2 {
            return Err(LatticeError::Parse("gram header needs a rank".into()));
        }
        let r: usize = header[1]
            .parse()
            .map_err(|_| LatticeError::Parse("bad rank".into()))?;
        if lines.len() != r + 1 {
            return Err(LatticeError::Parse(format!("expected {r} matrix rows")));
        }
        let gram: Vec<Vec<i64>> = lines[1..]
            .iter()
            .map(|row| parse_row(row, r, "gram row"))
            .collect::<Result<_, _>>()?;
        return Ok(ParsedLattice::Gram(GramLattice::new(gram)?));
    }
    if header.len() != 2 {
        return Err(LatticeError::Parse("header must be `n r` or `gram r`".into()));
    }
    let n: usize = header[0]
        .parse()
        .map_err(|_| LatticeError::Parse("bad ambient rank".into()))?;
    let r: usize = header[1]
        .parse()
        .map_err(|_| LatticeError::Parse("bad rank".into()))?;
    if lines.len() != r + 1 {
        return Err(LatticeError::Parse(format!("expected {r} basis columns")));
    }
    let columns: Vec<Vec<i64>> = lines[1..]
        .iter()
        .map(|row| parse_row(row, n, "basis column"))
        .collect::<Result<_, _>>()?;
    Ok(ParsedLattice::Embedded(EmbeddedLattice::new(n, columns)?))
}

pub fn write_lattice_text(l: &EmbeddedLattice) -> String {
    let mut out = format!("{} {}\n", l.ambient_rank(), l.rank());
    for col in l.columns() {
        let row: Vec<String> = col.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
