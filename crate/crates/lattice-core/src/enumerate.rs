use crate::{GramLattice, LatticeError};
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// Hard caps for the enumeration kernels. The node ceiling counts candidate
/// coordinate assignments tested across a whole search.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub node_ceiling: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { node_ceiling: 10_000_000 }
    }
}

impl SearchLimits {
    /// Limits from the environment override (CUBETILE_NODE_CEILING) or the
    /// default.
    pub fn from_env() -> Self {
        match std::env::var("CUBETILE_NODE_CEILING") {
            Ok(s) => match s.trim().parse() {
                Ok(n) => SearchLimits { node_ceiling: n },
                Err(_) => SearchLimits::default(),
            },
            Err(_) => SearchLimits::default(),
        }
    }
}

type Q = Ratio<i128>;

/// All lattice vectors of self-pairing at most `bound`, as coefficient
/// vectors. Includes the zero vector and both signs of each vector.
/// Fincke-Pohst style enumeration over an exact rational Cholesky
/// decomposition; no rounding anywhere.
pub fn short_vectors(
    l: &GramLattice,
    bound: i128,
    limits: SearchLimits,
) -> Result<Vec<Vec<i64>>, LatticeError> {
    let r = l.rank();
    if bound < 0 {
        return Ok(Vec::new());
    }
    if r == 0 {
        return Ok(vec![Vec::new()]);
    }
    // q[i][i] = weight of coordinate i, q[i][j] (j>i) = offset coefficient.
    let mut q: Vec<Vec<Q>> = l
        .gram()
        .iter()
        .map(|row| row.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    for i in 0..r {
        for j in i + 1..r {
            let f = q[i][j] / q[i][i];
            q[j][i] = q[i][j];
            q[i][j] = f;
        }
        for k in i + 1..r {
            for m in k..r {
                let sub = q[k][i] * q[i][m];
                q[k][m] -= sub;
            }
        }
    }

    let mut out = Vec::new();
    let mut x = vec![0i64; r];
    let mut nodes = 0u64;
    descend(
        &q,
        r,
        Q::from_integer(bound),
        &mut x,
        &mut nodes,
        limits.node_ceiling,
        &mut out,
    )?;
    Ok(out)
}

/// Recursion over coordinates r-1 down to 0. `allowance` is the remaining
/// quadratic budget at the current level.
fn descend(
    q: &[Vec<Q>],
    level: usize,
    allowance: Q,
    x: &mut Vec<i64>,
    nodes: &mut u64,
    ceiling: u64,
    out: &mut Vec<Vec<i64>>,
) -> Result<(), LatticeError> {
    let r = q.len();
    if level == 0 {
        out.push(x.clone());
        return Ok(());
    }
    let i = level - 1;
    // Center of the allowed interval for x_i given the chosen x_{i+1..}.
    let mut center = Q::zero();
    for j in i + 1..r {
        center += q[i][j] * Q::from_integer(x[j] as i128);
    }
    // q[i][i] (x_i + center)^2 <= allowance
    let radius2 = allowance / q[i][i];
    if radius2.is_negative() {
        return Ok(());
    }
    let rad = isqrt_ceil(&radius2);
    let c_floor = floor(&(-center));
    let lo = c_floor - rad - 1;
    let hi = c_floor + rad + 1;
    for xi in lo..=hi {
        *nodes += 1;
        if *nodes > ceiling {
            return Err(LatticeError::BoundTooLarge(format!(
                "short vector enumeration passed {ceiling} nodes"
            )));
        }
        let t = Q::from_integer(xi) + center;
        let used = q[i][i] * t * t;
        if used <= allowance {
            x[i] = i64::try_from(xi)
                .map_err(|_| LatticeError::BoundTooLarge("coordinate overflow".into()))?;
            descend(q, i, allowance - used, x, nodes, ceiling, out)?;
            x[i] = 0;
        }
    }
    Ok(())
}

fn floor(x: &Q) -> i128 {
    x.floor().to_integer()
}

/// Smallest integer s with s^2 >= x (x >= 0).
fn isqrt_ceil(x: &Q) -> i128 {
    let f = x.ceil().to_integer();
    if f <= 0 {
        return 0;
    }
    let mut s = integer_sqrt(f as u128) as i128;
    while s * s < f {
        s += 1;
    }
    s
}

fn integer_sqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = 1u128 << ((128 - n.leading_zeros()).div_ceil(2));
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}
