//! Finite continued fractions over `R ∪ {∞}`, the two simple expansions of a
//! rational, convergents, and the translation between k-sequences and simple
//! continued fractions.
//!
//! A k-sequence `(k_1, k_2, ...)` of naturals names the number
//! `[0, 1, k_1, 1, k_2, 1, ...]`. Gathering the runs of zeros turns this
//! nonsimple expansion into the simple one
//! `[0, p_1, k_{p_1}, p_2 - p_1, k_{p_2}, ...]` where `p_1 < p_2 < ...` are the
//! positions of the nonzero entries.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_arith::{ExtendedRational, Integer, Natural, Rational};
use crate::{Error, Result};

/// Longest k-sequence (and nonsimple expansion) materialized term by term.
pub const DENSE_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(len: usize) -> Parity {
        if len.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `[a_0; a_1, ..., a_N]` with `a_i >= 0` for `i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    a0: Integer,
    terms: Vec<Integer>,
}

impl CfExpansion {
    pub fn new(a0: Integer, terms: Vec<Integer>) -> Result<Self> {
        if let Some((i, t)) = terms.iter().enumerate().find(|(_, t)| t.is_negative()) {
            return Err(Error::NegativeTerm {
                index: i + 1,
                value: t.clone(),
            });
        }
        Ok(CfExpansion { a0, terms })
    }

    pub fn from_i64s(a0: i64, terms: &[i64]) -> Result<Self> {
        CfExpansion::new(a0.into(), terms.iter().map(|&t| t.into()).collect())
    }

    pub fn a0(&self) -> &Integer {
        &self.a0
    }

    /// `a_1, ..., a_N`.
    pub fn terms(&self) -> &[Integer] {
        &self.terms
    }

    /// Index of the last partial quotient, `N`.
    pub fn last_index(&self) -> usize {
        self.terms.len()
    }

    pub fn is_simple(&self) -> bool {
        self.terms.iter().all(Signed::is_positive)
    }

    /// The first `n` terms after `a_0`.
    pub fn truncate(&self, n: usize) -> CfExpansion {
        CfExpansion {
            a0: self.a0.clone(),
            terms: self.terms[..n.min(self.terms.len())].to_vec(),
        }
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.a0)?;
        for (i, t) in self.terms.iter().enumerate() {
            f.write_str(if i == 0 { "; " } else { ", " })?;
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// A continued fraction with every `a_i >= 1` for `i >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleCf(CfExpansion);

impl SimpleCf {
    pub fn new(a0: Integer, terms: Vec<Integer>) -> Result<Self> {
        SimpleCf::try_from(CfExpansion::new(a0, terms)?)
    }

    pub fn from_i64s(a0: i64, terms: &[i64]) -> Result<Self> {
        SimpleCf::try_from(CfExpansion::from_i64s(a0, terms)?)
    }

    pub fn expansion(&self) -> &CfExpansion {
        &self.0
    }

    pub fn a0(&self) -> &Integer {
        &self.0.a0
    }

    pub fn terms(&self) -> &[Integer] {
        &self.0.terms
    }

    pub fn last_index(&self) -> usize {
        self.0.last_index()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.last_index())
    }

    pub fn value(&self) -> Rational {
        eval_cf(&self.0)
            .into_finite()
            .expect("simple continued fractions are finite")
    }
}

impl TryFrom<CfExpansion> for SimpleCf {
    type Error = Error;

    fn try_from(cf: CfExpansion) -> Result<Self> {
        if let Some((i, t)) = cf.terms.iter().enumerate().find(|(_, t)| !t.is_positive()) {
            return Err(Error::NonSimpleTerm {
                index: i + 1,
                value: t.clone(),
            });
        }
        Ok(SimpleCf(cf))
    }
}

impl From<SimpleCf> for CfExpansion {
    fn from(cf: SimpleCf) -> Self {
        cf.0
    }
}

impl fmt::Display for SimpleCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finitely supported sequence `(k_i)_{i >= 1}` of naturals.
///
/// Stored sparsely as `(position, value)` pairs with strictly increasing
/// positions `>= 1` and values `> 0`, so a single nonzero entry far out (as
/// for `1/q` with `q` huge) costs one pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KSequence {
    support: Vec<(Natural, Natural)>,
}

impl KSequence {
    pub fn zero() -> Self {
        KSequence::default()
    }

    /// From `k_1, k_2, ...`; trailing zeros are dropped.
    pub fn from_entries<I, T>(entries: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<Natural>,
    {
        let support = entries
            .into_iter()
            .enumerate()
            .filter_map(|(i, k)| {
                let k = k.into();
                (!k.is_zero()).then(|| (Natural::from(i + 1), k))
            })
            .collect();
        KSequence { support }
    }

    /// From explicit `(position, value)` pairs. Zero values are dropped;
    /// positions must be `>= 1` and strictly increasing.
    pub fn from_support(pairs: Vec<(Natural, Natural)>) -> Option<Self> {
        let support: Vec<_> = pairs.into_iter().filter(|(_, k)| !k.is_zero()).collect();
        let ordered = support.windows(2).all(|w| w[0].0 < w[1].0);
        let positive = support.first().is_none_or(|(p, _)| !p.is_zero());
        (ordered && positive).then_some(KSequence { support })
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Largest index with `k_h > 0`; 0 for the zero sequence.
    pub fn h(&self) -> Natural {
        self.support
            .last()
            .map_or_else(Natural::zero, |(p, _)| p.clone())
    }

    pub fn support(&self) -> &[(Natural, Natural)] {
        &self.support
    }

    pub fn get(&self, index: &Natural) -> Natural {
        self.support
            .binary_search_by(|(p, _)| p.cmp(index))
            .map_or_else(|_| Natural::zero(), |i| self.support[i].1.clone())
    }

    /// `k_1, ..., k_h`, or `TooLong` when `h` exceeds [`DENSE_LIMIT`].
    pub fn to_dense(&self) -> Result<Vec<Natural>> {
        let h = self.h();
        let len = h
            .to_usize()
            .filter(|&l| l <= DENSE_LIMIT)
            .ok_or(Error::TooLong(h))?;
        let mut out = vec![Natural::zero(); len];
        for (p, k) in &self.support {
            // positions are bounded by h, which fits
            out[p.to_usize().unwrap() - 1] = k.clone();
        }
        Ok(out)
    }
}

impl fmt::Display for KSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_dense() {
            Ok(entries) => {
                f.write_str("[")?;
                for (i, k) in entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_str("]")
            }
            Err(_) => {
                f.write_str("{")?;
                for (i, (p, k)) in self.support.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}: {k}")?;
                }
                f.write_str("}")
            }
        }
    }
}

/// Value of `[head, t_1, ..., t_N]` where the head may be any extended value.
pub fn eval_with_head(head: &ExtendedRational, tail: &[Integer]) -> ExtendedRational {
    match tail.split_last() {
        None => head.clone(),
        Some((last, rest)) => {
            let mut v = ExtendedRational::integer(last.clone());
            for a in rest.iter().rev() {
                v = &ExtendedRational::integer(a.clone()) + &v.recip();
            }
            head + &v.recip()
        }
    }
}

/// Right-to-left evaluation with the partial arithmetic of `R ∪ {∞}`.
///
/// Zero partial quotients are legal: a tail worth `0` turns into `∞` one
/// step up, and a tail worth `∞` contributes nothing.
pub fn eval_cf(cf: &CfExpansion) -> ExtendedRational {
    let v = eval_with_head(&ExtendedRational::integer(cf.a0.clone()), &cf.terms);
    debug_assert!(!v.is_undefined());
    v
}

/// The simple expansion of `r ∈ [0, 1)` whose last index has the requested
/// parity. `0` is `[0]`, which counts as even and has no odd expansion.
pub fn expand_simple(r: &Rational, parity: Parity) -> Result<SimpleCf> {
    if !crate::exact_arith::in_unit_interval(r) {
        return Err(Error::OutOfUnitInterval {
            value: r.to_string(),
        });
    }
    let mut terms = euclid_terms(r.numer(), r.denom());
    if terms.is_empty() {
        return match parity {
            Parity::Even => Ok(SimpleCf(CfExpansion {
                a0: Integer::zero(),
                terms,
            })),
            Parity::Odd => Err(Error::OutOfOpenUnitInterval {
                value: r.to_string(),
            }),
        };
    }
    if Parity::of(terms.len()) != parity {
        let last = terms.last_mut().unwrap();
        debug_assert!(*last >= Integer::from(2));
        *last -= 1;
        terms.push(Integer::one());
    }
    Ok(SimpleCf(CfExpansion {
        a0: Integer::zero(),
        terms,
    }))
}

/// Partial quotients of `p/q` after `a_0 = 0`, for `0 <= p < q`.
fn euclid_terms(p: &Integer, q: &Integer) -> Vec<Integer> {
    let (mut num, mut den) = (q.clone(), p.clone());
    let mut terms = Vec::new();
    while !den.is_zero() {
        let (a, rem) = num_integer::Integer::div_rem(&num, &den);
        terms.push(a);
        num = std::mem::replace(&mut den, rem);
    }
    terms
}

/// `(p_n, q_n)` for `n = 0..=N`, starting from `p_0 = a_0`, `q_0 = 1`.
pub fn convergents(cf: &SimpleCf) -> Vec<(Integer, Integer)> {
    let mut out = Vec::with_capacity(cf.last_index() + 1);
    let (mut p_prev, mut q_prev) = (Integer::one(), Integer::zero());
    let (mut p, mut q) = (cf.a0().clone(), Integer::one());
    out.push((p.clone(), q.clone()));
    for a in cf.terms() {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push((p.clone(), q.clone()));
    }
    out
}

/// `[0, p_1, k_{p_1}, p_2 - p_1, k_{p_2}, ..., p_m - p_{m-1}, k_{p_m}]`.
pub fn k_to_simple(k: &KSequence) -> Result<SimpleCf> {
    if k.is_zero() {
        return Err(Error::ZeroSequence);
    }
    let mut terms = Vec::with_capacity(2 * k.support.len());
    let mut prev = Natural::zero();
    for (p, kp) in &k.support {
        terms.push(Integer::from(p - &prev));
        terms.push(Integer::from(kp.clone()));
        prev = p.clone();
    }
    Ok(SimpleCf(CfExpansion {
        a0: Integer::zero(),
        terms,
    }))
}

/// Inverse of [`k_to_simple`]: `k_{p_j} = a_{2j}` at `p_j = a_1 + a_3 + ... + a_{2j-1}`.
pub fn simple_to_k(cf: &SimpleCf) -> Result<KSequence> {
    if !cf.a0().is_zero() {
        return Err(Error::NonzeroLeadingTerm(cf.a0().clone()));
    }
    if !cf.last_index().is_multiple_of(2) {
        return Err(Error::OddLength(cf.last_index()));
    }
    let mut position = Natural::zero();
    let support = cf
        .terms()
        .chunks_exact(2)
        .map(|pair| {
            // simple terms are positive
            position += pair[0].magnitude();
            (position.clone(), pair[1].magnitude().clone())
        })
        .collect();
    Ok(KSequence { support })
}

/// `[0, 1, k_1, 1, k_2, ..., 1, k_h]`, term by term.
pub fn nonsimple_expansion(k: &KSequence) -> Result<CfExpansion> {
    let entries = k.to_dense()?;
    let mut terms = Vec::with_capacity(2 * entries.len());
    for e in entries {
        terms.push(Integer::one());
        terms.push(Integer::from(e));
    }
    Ok(CfExpansion {
        a0: Integer::zero(),
        terms,
    })
}

/// `θ = [0, 1, k_1, 1, k_2, ..., 1, k_h] ∈ [0, 1)`.
///
/// Evaluated from the nonsimple expansion itself when `h` is at most
/// [`DENSE_LIMIT`], otherwise from the equal simple expansion.
pub fn k_value(k: &KSequence) -> Rational {
    let cf = match nonsimple_expansion(k) {
        Ok(cf) => cf,
        Err(_) => k_to_simple(k).expect("long sequences are nonzero").into(),
    };
    eval_cf(&cf)
        .into_finite()
        .expect("k-sequence expansions have finite value")
}

/// An exact interval containing `[0, 1, k_1, 1, k_2, ...]` for any
/// continuation of `k_1, ..., k_depth`.
///
/// The endpoints are the truncations `[0, 1, k_1, ..., 1, k_depth]` (even
/// index) and `[0, 1, k_1, ..., 1, k_depth, 1]` (odd index): the unknown tail
/// `[1, k_{depth+1}, 1, ...]` lies in `[1, ∞]` and the value is monotone in it.
/// Entries past the end of `prefix` are taken as zero.
pub fn k_value_bounds(prefix: &[Natural], depth: usize) -> (Rational, Rational) {
    let mut terms = Vec::with_capacity(2 * depth + 1);
    for i in 0..depth {
        terms.push(Integer::one());
        terms.push(Integer::from(prefix.get(i).cloned().unwrap_or_default()));
    }
    let zero = ExtendedRational::zero();
    let even = eval_with_head(&zero, &terms);
    terms.push(Integer::one());
    let odd = eval_with_head(&zero, &terms);
    let (even, odd) = (
        even.into_finite().expect("truncations are finite"),
        odd.into_finite().expect("truncations are finite"),
    );
    if even <= odd {
        (even, odd)
    } else {
        (odd, even)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;
    use proptest::prelude::*;

    fn cf(a0: i64, terms: &[i64]) -> CfExpansion {
        CfExpansion::from_i64s(a0, terms).unwrap()
    }

    fn scf(terms: &[i64]) -> SimpleCf {
        SimpleCf::from_i64s(0, terms).unwrap()
    }

    fn fin(p: i64, q: i64) -> ExtendedRational {
        ExtendedRational::Finite(ratio(p, q))
    }

    fn ks(entries: &[u32]) -> KSequence {
        KSequence::from_entries(entries.iter().copied())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_cf(&cf(1, &[0])), ExtendedRational::Infinity);
        assert_eq!(eval_cf(&cf(1, &[0, 1, 0, 1, 0, 1])), fin(4, 1));
        assert_eq!(eval_cf(&cf(0, &[2, 2])), fin(2, 5));
        assert_eq!(eval_cf(&cf(-3, &[])), fin(-3, 1));
    }

    #[test]
    fn negative_terms_rejected() {
        assert!(matches!(
            CfExpansion::from_i64s(0, &[1, -1]),
            Err(Error::NegativeTerm { index: 2, .. })
        ));
        assert!(matches!(
            SimpleCf::from_i64s(0, &[1, 0]),
            Err(Error::NonSimpleTerm { index: 2, .. })
        ));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand_simple(&ratio(1, 2), Parity::Even).unwrap(), scf(&[1, 1]));
        assert_eq!(expand_simple(&ratio(1, 2), Parity::Odd).unwrap(), scf(&[2]));
        assert_eq!(expand_simple(&ratio(0, 1), Parity::Even).unwrap(), scf(&[]));
        assert_eq!(expand_simple(&ratio(2, 5), Parity::Even).unwrap(), scf(&[2, 2]));
        assert_eq!(expand_simple(&ratio(2, 5), Parity::Odd).unwrap(), scf(&[2, 1, 1]));
    }

    #[test]
    fn expand_rejects_out_of_range() {
        for r in [ratio(1, 1), ratio(-1, 3), ratio(7, 2)] {
            assert!(matches!(
                expand_simple(&r, Parity::Even),
                Err(Error::OutOfUnitInterval { .. })
            ));
        }
        assert!(expand_simple(&ratio(0, 1), Parity::Odd).is_err());
    }

    #[test]
    fn convergent_examples() {
        let c = convergents(&scf(&[2, 2]));
        let expect: Vec<(Integer, Integer)> =
            vec![(0.into(), 1.into()), (1.into(), 2.into()), (2.into(), 5.into())];
        assert_eq!(c, expect);
        assert_eq!(convergents(&scf(&[7]))[1].1, Integer::from(7));
        assert_eq!(
            convergents(&scf(&[1, 1, 1, 1])).last().unwrap(),
            &(Integer::from(3), Integer::from(5))
        );
    }

    #[test]
    fn k_to_simple_examples() {
        assert_eq!(k_to_simple(&ks(&[1])).unwrap(), scf(&[1, 1]));
        assert_eq!(k_to_simple(&ks(&[0, 2])).unwrap(), scf(&[2, 2]));
        assert_eq!(k_to_simple(&ks(&[1, 1])).unwrap(), scf(&[1, 1, 1, 1]));
        assert_eq!(k_to_simple(&ks(&[0, 0])), Err(Error::ZeroSequence));
    }

    #[test]
    fn simple_to_k_examples() {
        assert_eq!(simple_to_k(&scf(&[1, 1, 1, 1])).unwrap(), ks(&[1, 1]));
        assert_eq!(simple_to_k(&scf(&[2, 2])).unwrap(), ks(&[0, 2]));
        assert_eq!(simple_to_k(&scf(&[])).unwrap(), KSequence::zero());
        assert_eq!(simple_to_k(&scf(&[2])), Err(Error::OddLength(1)));
        assert!(matches!(
            simple_to_k(&SimpleCf::from_i64s(1, &[1, 1]).unwrap()),
            Err(Error::NonzeroLeadingTerm(_))
        ));
    }

    #[test]
    fn k_value_examples() {
        assert_eq!(k_value(&ks(&[1])), ratio(1, 2));
        assert_eq!(k_value(&KSequence::zero()), ratio(0, 1));
        assert_eq!(k_value(&ks(&[2])), ratio(2, 3));
        assert_eq!(k_value(&ks(&[1, 1])), ratio(3, 5));
    }

    #[test]
    fn k_value_far_support() {
        // 1/q with q past the dense limit: k_{q-1} = 1
        let q = Natural::from(1u64 << 40);
        let k = KSequence::from_support(vec![(q.clone() - 1u32, Natural::one())]).unwrap();
        assert!(k.to_dense().is_err());
        assert_eq!(k_value(&k), Rational::new(1.into(), Integer::from(q)));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let k = ks(&[0, 2, 0, 0]);
        assert_eq!(k.h(), Natural::from(2u32));
        assert_eq!(k, ks(&[0, 2]));
        assert_eq!(k.to_string(), "[0,2]");
        assert_eq!(KSequence::zero().to_string(), "[]");
        assert_eq!(k.get(&Natural::from(2u32)), Natural::from(2u32));
        assert_eq!(k.get(&Natural::from(9u32)), Natural::zero());
    }

    #[test]
    fn support_constructor_validates() {
        let n = |v: u32| Natural::from(v);
        assert!(KSequence::from_support(vec![(n(2), n(1)), (n(1), n(1))]).is_none());
        assert!(KSequence::from_support(vec![(n(0), n(1))]).is_none());
        assert_eq!(
            KSequence::from_support(vec![(n(1), n(0)), (n(3), n(2))]).unwrap(),
            ks(&[0, 0, 2])
        );
    }

    #[test]
    fn bounds_all_zero_prefix() {
        for depth in 0..8 {
            let prefix = vec![Natural::zero(); depth];
            let (lo, hi) = k_value_bounds(&prefix, depth);
            assert_eq!(lo, ratio(0, 1));
            assert_eq!(hi, ratio(1, depth as i64 + 1));
        }
    }

    #[test]
    fn bounds_contain_finite_values() {
        let prefix: Vec<Natural> = vec![1u32.into(), 1u32.into()];
        let (lo, hi) = k_value_bounds(&prefix, 2);
        assert!(lo <= ratio(3, 5) && ratio(3, 5) <= hi);

        let mut last_width = None;
        for depth in 1..12 {
            let mut prefix = vec![Natural::zero(); depth];
            prefix[0] = 2u32.into();
            let (lo, hi) = k_value_bounds(&prefix, depth);
            assert_eq!(lo, ratio(2, 3));
            let width = &hi - &lo;
            if let Some(w) = last_width {
                assert!(width < w);
            }
            last_width = Some(width);
        }
    }

    fn arb_simple_terms(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(1..50i64, 0..max_len)
    }

    proptest! {
        #[test]
        fn expansion_round_trip(terms in arb_simple_terms(12)) {
            let value = scf(&terms).value();
            // [0; 1] = 1 is the only such value outside [0, 1)
            prop_assume!(value < ratio(1, 1));
            for parity in [Parity::Even, Parity::Odd] {
                if value == ratio(0, 1) && parity == Parity::Odd {
                    continue;
                }
                let again = expand_simple(&value, parity).unwrap();
                prop_assert_eq!(again.parity(), parity);
                prop_assert_eq!(again.value(), value.clone());
            }
        }

        #[test]
        fn two_representations_agree(mut terms in arb_simple_terms(10), last in 2..100i64) {
            terms.push(last);
            let long = {
                let mut t = terms.clone();
                *t.last_mut().unwrap() -= 1;
                t.push(1);
                t
            };
            prop_assert_eq!(eval_cf(&cf(0, &terms)), eval_cf(&cf(0, &long)));
        }

        #[test]
        fn convergents_match_truncations(a0 in -5..5i64, terms in arb_simple_terms(10)) {
            let c = SimpleCf::from_i64s(a0, &terms).unwrap();
            for (n, (p, q)) in convergents(&c).into_iter().enumerate() {
                let t = eval_cf(&c.expansion().truncate(n));
                prop_assert_eq!(t, ExtendedRational::Finite(Rational::new(p, q)));
            }
        }

        #[test]
        fn convergents_interleave(terms in arb_simple_terms(14)) {
            let values: Vec<Rational> = convergents(&scf(&terms))
                .into_iter()
                .map(|(p, q)| Rational::new(p, q))
                .collect();
            let evens: Vec<_> = values.iter().step_by(2).collect();
            let odds: Vec<_> = values.iter().skip(1).step_by(2).collect();
            prop_assert!(evens.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(odds.windows(2).all(|w| w[0] > w[1]));
            for e in &evens {
                for o in &odds {
                    prop_assert!(e < o);
                }
            }
        }

        #[test]
        fn k_and_simple_inverse(entries in prop::collection::vec(0..4u32, 1..8)) {
            let k = ks(&entries);
            prop_assume!(!k.is_zero());
            let simple = k_to_simple(&k).unwrap();
            prop_assert_eq!(simple_to_k(&simple).unwrap(), k.clone());
            prop_assert_eq!(
                eval_cf(&nonsimple_expansion(&k).unwrap()),
                eval_cf(simple.expansion())
            );
        }

        #[test]
        fn simple_and_k_inverse(terms in prop::collection::vec(1..20i64, 0..5)) {
            let mut terms = terms;
            if terms.len() % 2 == 1 {
                terms.push(1);
            }
            let c = scf(&terms);
            let k = simple_to_k(&c).unwrap();
            if terms.is_empty() {
                prop_assert!(k.is_zero());
            } else {
                prop_assert_eq!(k_to_simple(&k).unwrap(), c);
            }
        }

        #[test]
        fn bounds_bracket_every_continuation(
            prefix in prop::collection::vec(0..4u32, 0..6),
            tail in prop::collection::vec(0..4u32, 0..6),
        ) {
            let full: Vec<u32> = prefix.iter().chain(tail.iter()).copied().collect();
            let value = k_value(&ks(&full));
            let prefix: Vec<Natural> = prefix.into_iter().map(Natural::from).collect();
            let (lo, hi) = k_value_bounds(&prefix, prefix.len());
            prop_assert!(lo <= value && value <= hi);
        }
    }
}
