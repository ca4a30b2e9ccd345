use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::poly::Mono;

/// Term orders supported by the engine.
///
/// `Block(k)` splits the variables into `[0, k)` and `[k, n)`; the first block is
/// compared first (grevlex within it), which makes it an elimination order for
/// the first `k` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block(usize),
}

impl MonomialOrder {
    /// Compare dense exponent vectors of equal length.
    pub fn cmp_dense(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    pub fn cmp_sparse(&self, a: &Mono, b: &Mono, nvars: usize) -> Ordering {
        self.cmp_dense(&a.dense(nvars), &b.dense(nvars))
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Block(k) => write!(f, "block:{}", k),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            _ => s
                .strip_prefix("block:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Block)
                .ok_or_else(|| format!("unknown monomial order '{}'", s)),
        }
    }
}
