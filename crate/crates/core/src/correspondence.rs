//! The bijection between rationals in `[0, 1)` and invariants `(n, m)` of
//! index-`(-1, 1)` extensions with `gcd(m, n) = 1`.
//!
//! Forward: even-length simple expansion, then the k-sequence, then
//! `(φ_h, Σ_{ℓ<h} φ_ℓ)`. Backward: a modified Euclidean algorithm recovers
//! the k-sequence from `(n, m)`, and `[0, 1, k_1, ..., 1, k_h]` gives the
//! rational back. `θ = 0` corresponds to `(1, 0)` and the zero sequence.

use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::continued_fractions::{self, KSequence, Parity, SimpleCf};
use crate::exact_arith::{in_unit_interval, Integer, Natural, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInvariant {
    /// Size of the matrix algebra in the quotient.
    pub n: Natural,
    /// Defect class, an integer in `[0, n)`.
    pub m: Natural,
    pub k: KSequence,
    pub theta: Rational,
}

/// `(φ_h, Σ_{ℓ<h} φ_ℓ)` for `k`; `(1, 0)` for the zero sequence.
///
/// Runs `φ_f = k_f Σ_{ℓ<f} φ_ℓ + φ_{f-1}` over the support only: across a
/// stretch of zeros `φ` is constant and the running sum grows linearly.
pub fn k_to_invariant(k: &KSequence) -> (Natural, Natural) {
    let mut phi = Natural::one();
    let mut sum = Natural::one();
    let mut at = Natural::zero();
    for (p, kp) in k.support() {
        let gap = p - &at - 1u32;
        sum += &gap * &phi;
        phi = kp * &sum + &phi;
        sum += &phi;
        at = p.clone();
    }
    let m = &sum - &phi;
    (phi, m)
}

pub fn rational_to_invariant(r: &Rational) -> Result<RationalInvariant> {
    if !in_unit_interval(r) {
        return Err(Error::OutOfUnitInterval {
            value: r.to_string(),
        });
    }
    let cf = continued_fractions::expand_simple(r, Parity::Even)?;
    let k = continued_fractions::simple_to_k(&cf)?;
    let (n, m) = k_to_invariant(&k);
    debug_assert_eq!(Integer::from(n.clone()), *r.denom());
    Ok(RationalInvariant {
        n,
        m,
        k,
        theta: r.clone(),
    })
}

fn check_invariant(n: &Natural, m: &Natural) -> Result<()> {
    let out_of_range = || Error::InvariantOutOfRange {
        n: n.clone(),
        m: m.clone(),
    };
    if n.is_zero() {
        return Err(Error::ZeroOrder);
    }
    if n.is_one() {
        return if m.is_zero() { Ok(()) } else { Err(out_of_range()) };
    }
    if m.is_zero() || m >= n {
        return Err(out_of_range());
    }
    if !m.gcd(n).is_one() {
        return Err(Error::NotCoprime {
            n: n.clone(),
            m: m.clone(),
        });
    }
    Ok(())
}

/// Quotients of the modified Euclidean algorithm for coprime `0 < m < n`.
///
/// Starting from `n = q_0 m + r_1`, step `ℓ` divides `r_ℓ` by
/// `m - (r_1 + ... + r_ℓ)`, stopping at the first zero remainder `r_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidRun {
    /// `(ℓ, q_ℓ)` for the nonzero quotients, `ℓ` increasing.
    pub quotients: Vec<(Natural, Natural)>,
    pub h: Natural,
}

/// Runs of zero quotients (a remainder smaller than the current divisor) are
/// taken in a single division, so the cost is logarithmic in `n`.
pub fn modified_euclid(n: &Natural, m: &Natural) -> Result<EuclidRun> {
    check_invariant(n, m)?;
    if m.is_zero() {
        return Err(Error::InvariantOutOfRange {
            n: n.clone(),
            m: m.clone(),
        });
    }
    let mut quotients = Vec::new();
    let mut step = Natural::zero();
    let mut dividend = n.clone();
    let mut divisor = m.clone();
    loop {
        assert!(!divisor.is_zero(), "divisor m - Σ r_i vanished before a zero remainder");
        if dividend < divisor {
            // q = 0 repeats while the divisor exceeds the (unchanged) remainder
            let skip = (&divisor - 1u32) / &dividend;
            divisor -= &skip * &dividend;
            step += skip;
            continue;
        }
        let (q, r) = dividend.div_rem(&divisor);
        quotients.push((step.clone(), q));
        if r.is_zero() {
            assert!(divisor.is_one(), "final divisor m - Σ r_i must be 1");
            return Ok(EuclidRun {
                quotients,
                h: step + 1u32,
            });
        }
        divisor -= &r;
        dividend = r;
        step += 1u32;
    }
}

/// Recovers `k` from `(n, m)`: `k_ℓ = q_{h-ℓ}` for `2 <= ℓ <= h` and
/// `k_1 = q_{h-1} - 1`.
pub fn invariant_to_k(n: &Natural, m: &Natural) -> Result<KSequence> {
    check_invariant(n, m)?;
    if n.is_one() {
        return Ok(KSequence::zero());
    }
    let run = modified_euclid(n, m)?;
    let support = run
        .quotients
        .iter()
        .rev()
        .map(|(step, q)| {
            let position = &run.h - step;
            let value = if position.is_one() { q - 1u32 } else { q.clone() };
            (position, value)
        })
        .collect();
    Ok(KSequence::from_support(support).expect("positions increase as steps decrease"))
}

pub fn invariant_to_rational(n: &Natural, m: &Natural) -> Result<Rational> {
    let theta = continued_fractions::k_value(&invariant_to_k(n, m)?);
    debug_assert_eq!(*theta.denom(), Integer::from(n.clone()));
    Ok(theta)
}

/// One level `A_n = M_{q_n} (+) M_{q_{n-1}}` of the Effros-Shen tower.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsTowerLevel {
    pub level: usize,
    /// `(q_n, q_{n-1})`.
    pub dims: (Integer, Integer),
    /// Multiplicities `[[a_{n+1}, 1], [1, 0]]` of `A_n -> A_{n+1}`; `None` at
    /// the last partial quotient.
    pub embedding: Option<[[Integer; 2]; 2]>,
}

impl EsTowerLevel {
    /// `embedding · dims`, the dimensions of the next level.
    pub fn next_dims(&self) -> Option<(Integer, Integer)> {
        self.embedding.as_ref().map(|t| {
            let (x, y) = &self.dims;
            (&t[0][0] * x + &t[0][1] * y, &t[1][0] * x + &t[1][1] * y)
        })
    }
}

pub fn es_tower(cf: &SimpleCf, depth: usize) -> Result<Vec<EsTowerLevel>> {
    let available = cf.last_index();
    if depth > available {
        return Err(Error::DepthExceedsTerms { depth, available });
    }
    let conv = continued_fractions::convergents(cf);
    let terms = cf.terms();
    Ok((1..=depth)
        .map(|n| EsTowerLevel {
            level: n,
            dims: (conv[n].1.clone(), conv[n - 1].1.clone()),
            embedding: terms.get(n).map(|a| {
                [
                    [a.clone(), Integer::one()],
                    [Integer::one(), Integer::zero()],
                ]
            }),
        })
        .collect())
}

/// Terminal `(q_N, q_{N-1})` of the even- and odd-length expansions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCandidates {
    pub even: (Integer, Integer),
    pub odd: (Integer, Integer),
}

pub fn rational_candidates(r: &Rational) -> Result<RationalCandidates> {
    if !in_unit_interval(r) || r.is_zero() {
        return Err(Error::OutOfOpenUnitInterval {
            value: r.to_string(),
        });
    }
    let terminal = |parity| -> Result<(Integer, Integer)> {
        let cf = continued_fractions::expand_simple(r, parity)?;
        let top = es_tower(&cf, cf.last_index())?.pop().expect("0 < r has terms");
        Ok(top.dims)
    };
    Ok(RationalCandidates {
        even: terminal(Parity::Even)?,
        odd: terminal(Parity::Odd)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;
    use crate::path_category::counts_by_recurrence;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn ks(entries: &[u32]) -> KSequence {
        KSequence::from_entries(entries.iter().copied())
    }

    fn int_pair(a: i64, b: i64) -> (Integer, Integer) {
        (a.into(), b.into())
    }

    /// The step-by-step algorithm with no run skipping.
    fn literal_euclid(n: u64, m: u64) -> Vec<u64> {
        let mut q = vec![n / m];
        let mut r = vec![0, n % m];
        let mut l = 1;
        while r[l] != 0 {
            let divisor = m - r[1..=l].iter().sum::<u64>();
            assert!(divisor > 0);
            q.push(r[l] / divisor);
            r.push(r[l] % divisor);
            l += 1;
        }
        q
    }

    #[test]
    fn forward_examples() {
        let inv = rational_to_invariant(&ratio(2, 5)).unwrap();
        assert_eq!((inv.n, inv.m, inv.k), (nat(5), nat(2), ks(&[0, 2])));
        let inv = rational_to_invariant(&ratio(2, 3)).unwrap();
        assert_eq!((inv.n, inv.m, inv.k), (nat(3), nat(1), ks(&[2])));
        let inv = rational_to_invariant(&ratio(0, 1)).unwrap();
        assert_eq!((inv.n, inv.m, inv.k), (nat(1), nat(0), KSequence::zero()));
        assert!(rational_to_invariant(&ratio(1, 1)).is_err());
        assert!(rational_to_invariant(&ratio(-1, 2)).is_err());
    }

    #[test]
    fn backward_examples() {
        assert_eq!(invariant_to_k(&nat(5), &nat(2)).unwrap(), ks(&[0, 2]));
        assert_eq!(invariant_to_k(&nat(3), &nat(1)).unwrap(), ks(&[2]));
        assert_eq!(invariant_to_k(&nat(1), &nat(0)).unwrap(), KSequence::zero());
        assert_eq!(invariant_to_rational(&nat(3), &nat(1)).unwrap(), ratio(2, 3));
        assert_eq!(invariant_to_rational(&nat(5), &nat(2)).unwrap(), ratio(2, 5));
        assert_eq!(invariant_to_rational(&nat(1), &nat(0)).unwrap(), ratio(0, 1));
    }

    #[test]
    fn backward_rejects_bad_invariants() {
        assert!(matches!(invariant_to_k(&nat(4), &nat(2)), Err(Error::NotCoprime { .. })));
        assert!(matches!(
            invariant_to_k(&nat(5), &nat(5)),
            Err(Error::InvariantOutOfRange { .. })
        ));
        assert!(matches!(
            invariant_to_k(&nat(5), &nat(0)),
            Err(Error::InvariantOutOfRange { .. })
        ));
        assert!(matches!(
            invariant_to_k(&nat(1), &nat(1)),
            Err(Error::InvariantOutOfRange { .. })
        ));
        assert_eq!(invariant_to_k(&nat(0), &nat(0)), Err(Error::ZeroOrder));
    }

    #[test]
    fn k_to_invariant_examples() {
        assert_eq!(k_to_invariant(&ks(&[1, 1])), (nat(5), nat(3)));
        assert_eq!(k_to_invariant(&KSequence::zero()), (nat(1), nat(0)));
        assert_eq!(k_to_invariant(&ks(&[2])), (nat(3), nat(1)));
    }

    #[test]
    fn accelerated_euclid_matches_literal() {
        for n in 2..=150u64 {
            for m in 1..n {
                if num_integer::gcd(n, m) != 1 {
                    continue;
                }
                let literal = literal_euclid(n, m);
                let run = modified_euclid(&nat(n), &nat(m)).unwrap();
                assert_eq!(run.h, nat(literal.len() as u64));
                let mut dense = vec![0u64; literal.len()];
                for (step, q) in &run.quotients {
                    dense[step.to_usize().unwrap()] = q.to_u64().unwrap();
                }
                assert_eq!(dense, literal, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn sparse_recurrence_matches_dense() {
        for entries in [&[1u32, 1][..], &[0, 2], &[2], &[0, 0, 3, 0, 1], &[4, 0, 0, 0, 0, 0, 2]] {
            let k = ks(entries);
            let counts = counts_by_recurrence(&k, entries.len());
            let (n, m) = k_to_invariant(&k);
            assert_eq!(n, counts.phi[entries.len()]);
            assert_eq!(m, counts.phi_sum_below_top());
        }
    }

    #[test]
    fn huge_denominators() {
        // 1/q and (q-1)/q exercise long zero runs on both sides
        let q = Natural::from(10u32).pow(30);
        for p in [Natural::one(), &q - 1u32, Natural::from(7u32)] {
            let r = Rational::new(p.clone().into(), q.clone().into());
            let inv = rational_to_invariant(&r).unwrap();
            assert_eq!(inv.n, q);
            assert_eq!(invariant_to_rational(&inv.n, &inv.m).unwrap(), r);
        }
    }

    #[test]
    fn defect_is_negated_inverse_of_numerator() {
        // m ≡ -p^{-1} (mod q), an independent closed form for the forward map
        for q in 2..=120i64 {
            for p in 1..q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let inv = rational_to_invariant(&ratio(p, q)).unwrap();
                let m = inv.m.to_i64().unwrap();
                assert_eq!((m * p + 1).rem_euclid(q), 0, "p/q = {p}/{q}");
            }
        }
    }

    #[test]
    fn tower_examples() {
        let cf = SimpleCf::from_i64s(0, &[2, 2]).unwrap();
        let levels = es_tower(&cf, 2).unwrap();
        assert_eq!(levels[0].dims, int_pair(2, 1));
        assert_eq!(levels[1].dims, int_pair(5, 2));
        assert_eq!(levels[0].next_dims(), Some(int_pair(5, 2)));
        assert_eq!(levels[1].embedding, None);

        let cf = SimpleCf::from_i64s(0, &[1, 1, 1, 1]).unwrap();
        let levels = es_tower(&cf, 4).unwrap();
        assert_eq!(levels[3].dims, int_pair(5, 3));
        assert_eq!(es_tower(&cf, 0).unwrap(), vec![]);
        assert!(matches!(es_tower(&cf, 5), Err(Error::DepthExceedsTerms { .. })));
    }

    #[test]
    fn candidates_examples() {
        let c = rational_candidates(&ratio(2, 5)).unwrap();
        assert_eq!((c.even, c.odd), (int_pair(5, 2), int_pair(5, 3)));
        let c = rational_candidates(&ratio(1, 2)).unwrap();
        assert_eq!((c.even, c.odd), (int_pair(2, 1), int_pair(2, 1)));
        let c = rational_candidates(&ratio(1, 3)).unwrap();
        assert_eq!((c.odd, c.even), (int_pair(3, 1), int_pair(3, 2)));
        assert!(rational_candidates(&ratio(0, 1)).is_err());
    }

    proptest! {
        #[test]
        fn tower_level_one_is_first_quotient(terms in prop::collection::vec(1..30i64, 1..10)) {
            let cf = SimpleCf::from_i64s(0, &terms).unwrap();
            let levels = es_tower(&cf, terms.len()).unwrap();
            prop_assert_eq!(&levels[0].dims, &int_pair(terms[0], 1));
            for w in levels.windows(2) {
                prop_assert_eq!(w[0].next_dims().unwrap(), w[1].dims.clone());
            }
        }

        #[test]
        fn round_trip_large(p in 0u64..u64::MAX, q in 1u64..u64::MAX) {
            let r = ratio(p as i128, q as i128);
            prop_assume!(in_unit_interval(&r));
            let inv = rational_to_invariant(&r).unwrap();
            prop_assert_eq!(Integer::from(inv.n.clone()), r.denom().clone());
            prop_assert_eq!(invariant_to_rational(&inv.n, &inv.m).unwrap(), r);
        }
    }
}
