//! Seeded Erdős–Rényi sampling and closed-form parity statistics.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Master seed for a sampling run.
///
/// Each trial gets its own seed mixed from `(master, trial index)`; a seed
/// keys a ChaCha8 stream that decides the pairs `(u, v)`, `u < v`, in
/// lexicographic order, one 64-bit draw per pair. Output is bit-exact across
/// platforms for a fixed `rand_chacha` major version.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    /// Seed for trial `index`, independent of every other index.
    pub fn for_trial(self, index: u64) -> Seed {
        Seed(splitmix64(self.0 ^ splitmix64(index.wrapping_add(0x5851_F42D_4C95_7F2D))))
    }

    /// Seed for a sub-stream, e.g. one per configuration in a sweep.
    pub fn derive(self, key: u64) -> Seed {
        Seed(splitmix64(self.0.wrapping_add(splitmix64(key))))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#018x}", self.0)
    }
}

impl FromStr for Seed {
    type Err = Error;

    /// Accepts decimal or `0x`-prefixed hexadecimal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
            None => s.replace('_', "").parse::<u64>(),
        };
        parsed
            .map(Seed)
            .map_err(|e| Error::invalid(format!("bad seed {s:?}: {e}")))
    }
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::invalid(format!("probability {p} outside [0, 1]")))
    }
}

/// Samples `G(n, p)`.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            // 53-bit uniform in [0, 1): p = 0 never fires, p = 1 always does.
            let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            if x < p {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Position of `(n, p)` relative to the two edge-probability windows used by
/// the concentration results. Logarithms are natural.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityWindow {
    pub n: usize,
    pub p: f64,
    /// `(ln n)² / √n ≤ p ≤ 1 − (ln n)² / √n`
    pub strong_ok: bool,
    /// `(ln n)² / n ≤ p ≤ 1 − (ln n)² / n`
    pub weak_ok: bool,
    pub strong_lower: f64,
    pub strong_upper: f64,
    pub weak_lower: f64,
    pub weak_upper: f64,
}

impl ProbabilityWindow {
    pub const LOG_BASE: &'static str = "natural";

    /// Bounds of the narrowest window containing `p`, or of the strong
    /// window when `p` is in neither.
    pub fn active_bounds(&self) -> (f64, f64) {
        if !self.strong_ok && self.weak_ok {
            (self.weak_lower, self.weak_upper)
        } else {
            (self.strong_lower, self.strong_upper)
        }
    }

    pub fn regime(&self) -> &'static str {
        match (self.strong_ok, self.weak_ok) {
            (true, _) => "strong",
            (false, true) => "weak-only",
            (false, false) => "out-of-regime",
        }
    }
}

pub fn classify_p(n: usize, p: f64) -> Result<ProbabilityWindow> {
    if n < 2 {
        return Err(Error::invalid(format!("window needs n >= 2, got {n}")));
    }
    check_probability(p)?;
    let ln2 = (n as f64).ln().powi(2);
    let strong = ln2 / (n as f64).sqrt();
    let weak = ln2 / n as f64;
    Ok(ProbabilityWindow {
        n,
        p,
        strong_ok: strong <= p && p <= 1.0 - strong,
        weak_ok: weak <= p && p <= 1.0 - weak,
        strong_lower: strong,
        strong_upper: 1.0 - strong,
        weak_lower: weak,
        weak_upper: 1.0 - weak,
    })
}

/// `½ (1 − 2p)^(n − b)`, the offset of a `b`-vertex parity probability
/// from one half. Sign is kept.
pub fn epsilon_b(n: usize, p: f64, b: usize) -> Result<f64> {
    check_probability(p)?;
    if b < 1 || b > n {
        return Err(Error::invalid(format!("b = {b} outside 1..={n}")));
    }
    Ok(0.5 * (1.0 - 2.0 * p).powi((n - b) as i32))
}

/// Probability that a fixed vertex of `G(n, p)` has odd degree:
/// `½ (1 − (1 − 2p)^(n − 1))`.
pub fn odd_degree_prob(n: usize, p: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::invalid("odd-degree probability needs n >= 1"));
    }
    Ok(0.5 - epsilon_b(n, p, 1)?)
}
