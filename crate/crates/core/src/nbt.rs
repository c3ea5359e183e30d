//! Rationals in `(0, 1/2)` and their NBT codes.
//!
//! The code `c_q` of `q = m/n` has `n + 1` symbols `s_0 … s_n`; `s_i = 1`
//! exactly when the segment from `(0,0)` to `(n,m)` meets a horizontal
//! integer line at some `x` in the open window `(i-1, i+1)`. The crossings sit
//! at `x = k·n/m` for `k = 0..=m`, and all window tests are done on integers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::symbolic::Word;

/// A reduced rational `num/den` with `0 < num/den < 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    /// Reduces `m/n` and checks the range.
    pub fn new(m: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDenominator(format!("{m}/{n}")));
        }
        let g = m.gcd(&n).max(1);
        let (num, den) = (m / g, n / g);
        if num == 0 || 2 * num as u128 >= den as u128 {
            return Err(Error::RationalOutOfRange { num, den });
        }
        Ok(Rational { num, den })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// All rationals in `(0, 1/2)` with denominator at most `max_den`,
    /// increasing.
    pub fn farey(max_den: u64) -> Vec<Rational> {
        let mut out: Vec<Rational> = (3..=max_den)
            .flat_map(|n| (1..=(n - 1) / 2).map(move |m| (m, n)))
            .filter(|&(m, n)| m.gcd(&n) == 1)
            .filter_map(|(m, n)| Rational::new(m, n).ok())
            .collect();
        out.sort();
        out
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::RationalSyntax(s.to_string());
        let (m, n) = s.trim().split_once('/').ok_or_else(bad)?;
        let m: u64 = m.trim().parse().map_err(|_| bad())?;
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(Error::ZeroDenominator(s.to_string()));
        }
        Rational::new(m, n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma separated list such as `2/5,2/7,1/3`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(str::parse).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NbtCode {
    pub q: Rational,
    #[serde(rename = "code")]
    pub word: Word,
}

impl NbtCode {
    /// Checks length, palindromy, the count of ones and the block shape
    /// `1 0^μ₁ 11 0^μ₂ 11 ⋯ 11 0^μ_m 1` with `μ₁, μ_m ≥ 1`. Interior blocks
    /// may be empty, as in `c_{3/7} = 10111101`.
    pub fn check_invariants(&self) -> Result<()> {
        let (m, n) = (self.q.num as usize, self.q.den as usize);
        let s = self.word.symbols();
        let fail = |what: &str| {
            Err(Error::Invariant(format!(
                "c_{} = {}: {what}",
                self.q, self.word
            )))
        };
        if s.len() != n + 1 {
            return fail("wrong length");
        }
        if !self.word.is_palindrome() {
            return fail("not a palindrome");
        }
        if self.word.ones() != 2 * m {
            return fail("wrong number of ones");
        }
        if s[0] != 1 || s[n] != 1 {
            return fail("must start and end with 1");
        }
        // between the outer 1s: zero blocks at both ends, ones in pairs
        let inner = &s[1..n];
        if inner.first() != Some(&0) || inner.last() != Some(&0) {
            return fail("outer zero blocks must be non-empty");
        }
        let odd_run = inner.split(|&b| b == 0).any(|run| run.len() % 2 == 1);
        if odd_run {
            return fail("ones must come in pairs");
        }
        Ok(())
    }
}

impl fmt::Display for NbtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

pub fn nbt_code(q: Rational) -> Result<NbtCode> {
    let m = q.num as u128;
    let n = q.den as u128;
    let len = q.den as usize + 1;
    let mut hits = vec![0u8; len];
    for k in 0..=m {
        let kn = k * n;
        // windows (i-1, i+1) containing x = kn/m: i with m(i-1) < kn < m(i+1)
        let lo = kn / m;
        let candidates = if kn.is_multiple_of(m) { lo..lo + 1 } else { lo..lo + 2 };
        for i in candidates {
            if i as usize >= len {
                continue;
            }
            if m * i < kn + m && kn < m * (i + 1) {
                hits[i as usize] += 1;
            }
        }
    }
    // consecutive crossings are n/m > 2 apart, so no window holds two of them
    if let Some(i) = hits.iter().position(|&h| h > 1) {
        return Err(Error::Invariant(format!(
            "two crossings of the line for {q} fall in the window around {i}"
        )));
    }
    let word = Word::new(hits)?;
    Ok(NbtCode { q, word })
}
