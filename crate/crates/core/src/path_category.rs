//! Finite paths in the category of paths `Λ(k)`.
//!
//! Vertices `v_1, v_2, ...` form a chain; between `v_{i+1}` and `v_i` sit the
//! commuting edges `α_i`, `β_i` (with `α_i β_{i+1} = β_i α_{i+1}`) and the
//! walls `γ_i^{(1)}, ..., γ_i^{(k_i)}`. Every morphism has a unique normal
//! form in which each wall-free stretch reads `α...αβ...β`.
//!
//! Enumerating these words directly gives an oracle for the counts `ψ_f`,
//! `φ_f` and for the defect `Σ_{μ ∈ Φ_h} (h - |μ|)`.

use std::fmt;

use num_traits::ToPrimitive;

use crate::continued_fractions::KSequence;
use crate::exact_arith::Natural;
use crate::{Error, Result};

pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    Alpha(usize),
    Beta(usize),
    /// `Gamma(level, wall)` with `1 <= wall <= k_level`.
    Gamma(usize, usize),
}

impl Edge {
    pub fn level(&self) -> usize {
        match *self {
            Edge::Alpha(i) | Edge::Beta(i) | Edge::Gamma(i, _) => i,
        }
    }

    pub fn is_wall(&self) -> bool {
        matches!(self, Edge::Gamma(..))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Edge::Alpha(i) => write!(f, "a{i}"),
            Edge::Beta(i) => write!(f, "b{i}"),
            Edge::Gamma(i, r) => write!(f, "g{i}.{r}"),
        }
    }
}

/// A path from `v_{|μ|+1}` to `v_1`, edges listed from level 1 upward.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PathWord {
    edges: Vec<Edge>,
}

impl PathWord {
    pub fn empty() -> Self {
        PathWord::default()
    }

    pub fn new(edges: Vec<Edge>) -> Self {
        PathWord { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn ends_in_wall(&self) -> bool {
        self.edges.last().is_some_and(Edge::is_wall)
    }

    /// Levels run `1, 2, ..., |μ|`, each wall index is in range for `k`, and
    /// no `β` precedes an `α` without a wall in between.
    pub fn is_normal_form(&self, k: &KSequence) -> bool {
        let mut seen_beta = false;
        for (i, e) in self.edges.iter().enumerate() {
            if e.level() != i + 1 {
                return false;
            }
            match *e {
                Edge::Alpha(_) if seen_beta => return false,
                Edge::Alpha(_) => {}
                Edge::Beta(_) => seen_beta = true,
                Edge::Gamma(level, wall) => {
                    if wall == 0 || Natural::from(wall) > k.get(&Natural::from(level)) {
                        return false;
                    }
                    seen_beta = false;
                }
            }
        }
        true
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return f.write_str("v1");
        }
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// `ψ_0..=ψ_f` and `φ_0..=φ_f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCounts {
    pub psi: Vec<Natural>,
    pub phi: Vec<Natural>,
}

impl PathCounts {
    /// `Σ_{ℓ < f} φ_ℓ` for the last computed `f`.
    pub fn phi_sum_below_top(&self) -> Natural {
        let top = self.phi.len() - 1;
        self.phi[..top].iter().sum()
    }
}

fn dense_entries(k: &KSequence, f: usize) -> Vec<Natural> {
    (1..=f).map(|i| k.get(&Natural::from(i))).collect()
}

/// `ψ_f = k_f Σ_{ℓ<f} (f-ℓ) ψ_ℓ` and `φ_f = k_f Σ_{ℓ<f} φ_ℓ + φ_{f-1}`.
///
/// The two recurrences are run independently; debug builds check
/// `φ_f = Σ_{ℓ≤f} ψ_ℓ` and `Σ_{ℓ<f} (f-ℓ) ψ_ℓ = Σ_{p<f} φ_{f-p-1}` at every step.
pub fn counts_by_recurrence(k: &KSequence, f: usize) -> PathCounts {
    let entries = dense_entries(k, f);
    let one = Natural::from(1u32);
    let mut psi = vec![one.clone()];
    let mut phi = vec![one];
    let mut phi_sum = Natural::from(1u32);
    for g in 1..=f {
        let kg = &entries[g - 1];
        let weighted: Natural = psi
            .iter()
            .enumerate()
            .map(|(l, p)| p * Natural::from(g - l))
            .sum();
        debug_assert_eq!(
            weighted,
            (0..g).map(|p| &phi[g - p - 1]).sum::<Natural>(),
            "weighted psi sum disagrees with folded phi sum at f = {g}"
        );
        psi.push(kg * weighted);
        let next = kg * &phi_sum + &phi[g - 1];
        phi_sum += &next;
        phi.push(next);
        debug_assert_eq!(phi[g], psi.iter().sum::<Natural>());
    }
    PathCounts { psi, phi }
}

/// Brute-force enumerator for the path sets `Ψ_f` and `Φ_f`.
#[derive(Debug, Clone, Copy)]
pub struct PathOracle {
    /// Largest `φ_f` the enumerator agrees to materialize.
    pub cap: u64,
}

impl Default for PathOracle {
    fn default() -> Self {
        PathOracle { cap: DEFAULT_CAP }
    }
}

impl PathOracle {
    pub fn with_cap(cap: u64) -> Self {
        PathOracle { cap }
    }

    fn check_cap(&self, k: &KSequence, f: usize) -> Result<Vec<usize>> {
        let predicted = counts_by_recurrence(k, f).phi[f].clone();
        if predicted > Natural::from(self.cap) {
            return Err(Error::CapExceeded {
                predicted,
                cap: self.cap,
            });
        }
        // every k_i with i <= f is bounded by φ_f
        Ok(dense_entries(k, f)
            .iter()
            .map(|e| e.to_usize().unwrap())
            .collect())
    }

    /// `Ψ_0, ..., Ψ_f`, each sorted lexicographically.
    fn psi_levels(&self, k: &KSequence, f: usize) -> Result<Vec<Vec<PathWord>>> {
        let entries = self.check_cap(k, f)?;
        let mut levels: Vec<Vec<PathWord>> = vec![vec![PathWord::empty()]];
        for g in 1..=f {
            let walls = entries[g - 1];
            let mut words = Vec::new();
            if walls > 0 {
                for (l, below) in levels.iter().enumerate() {
                    let gap = g - l - 1;
                    for nu in below {
                        for alphas in 0..=gap {
                            let mut edges = nu.edges.clone();
                            edges.extend((l + 1..=l + alphas).map(Edge::Alpha));
                            edges.extend((l + alphas + 1..g).map(Edge::Beta));
                            for wall in 1..=walls {
                                let mut e = edges.clone();
                                e.push(Edge::Gamma(g, wall));
                                words.push(PathWord { edges: e });
                            }
                        }
                    }
                }
            }
            words.sort();
            levels.push(words);
        }
        Ok(levels)
    }

    /// Normal-form words of length exactly `f` ending in a wall (`Ψ_0` is the
    /// empty path at `v_1`).
    pub fn enumerate_psi(&self, k: &KSequence, f: usize) -> Result<Vec<PathWord>> {
        Ok(self.psi_levels(k, f)?.pop().unwrap())
    }

    /// `Φ_f = Ψ_0 ⊔ ... ⊔ Ψ_f`, in lexicographic order.
    pub fn enumerate_phi(&self, k: &KSequence, f: usize) -> Result<Vec<PathWord>> {
        let mut all: Vec<PathWord> = self.psi_levels(k, f)?.into_iter().flatten().collect();
        all.sort();
        Ok(all)
    }

    /// `Σ_{μ ∈ Φ_h} (h - |μ|)` by enumeration.
    pub fn defect(&self, k: &KSequence) -> Result<Natural> {
        if k.is_zero() {
            return Err(Error::ZeroSequence);
        }
        let h = k.h().to_usize().ok_or_else(|| Error::TooLong(k.h()))?;
        Ok(self
            .enumerate_phi(k, h)?
            .iter()
            .map(|mu| Natural::from(h - mu.len()))
            .sum())
    }
}

pub fn enumerate_psi(k: &KSequence, f: usize) -> Result<Vec<PathWord>> {
    PathOracle::default().enumerate_psi(k, f)
}

pub fn defect_oracle(k: &KSequence) -> Result<Natural> {
    PathOracle::default().defect(k)
}
