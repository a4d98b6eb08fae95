//! Exact rational domination parameter `alpha` in `(0, 1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `alpha = num / den` in lowest terms with `0 < num <= den`.
///
/// Requirements such as `ceil(alpha * d)` are evaluated in integer
/// arithmetic; a float `0.1 * 1000` would already be off by one ulp.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    num: u64,
    den: u64,
}

impl Alpha {
    pub const ONE: Alpha = Alpha { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Alpha> {
        if den == 0 || num == 0 || num > den {
            return Err(Error::Alpha(format!("{num}/{den} is not in (0, 1]")));
        }
        let g = num.gcd(&den);
        Ok(Alpha {
            num: num / g,
            den: den / g,
        })
    }

    #[inline]
    pub fn numer(&self) -> u64 {
        self.num
    }

    #[inline]
    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `ceil(alpha * d)`, computed as `(num*d + den - 1) div den`.
    #[inline]
    pub fn ceil_times(&self, d: usize) -> usize {
        let (p, q) = (self.num as u128, self.den as u128);
        (p * d as u128).div_ceil(q) as usize
    }

    /// `floor(min_degree * (1 - alpha)) + 1`.
    #[inline]
    pub fn delta_hat(&self, min_degree: usize) -> usize {
        let (p, q) = (self.num as u128, self.den as u128);
        (min_degree as u128 * (q - p) / q) as usize + 1
    }
}

/// Number of neighbours a vertex of degree `d` needs: `ceil(alpha * d)`.
pub fn ceil_alpha_times(alpha: Alpha, d: usize) -> usize {
    alpha.ceil_times(d)
}

impl Ord for Alpha {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Alpha {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parses `"p/q"`. Decimal forms such as `"0.1"` are rejected.
impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alpha> {
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::Alpha(format!("'{s}' is not of the form p/q")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Alpha(format!("'{s}' is not of the form p/q")))
        };
        Alpha::new(parse(p)?, parse(q)?)
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
