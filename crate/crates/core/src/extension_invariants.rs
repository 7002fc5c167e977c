//! The invariant of an extension `0 -> K (+) K -> E -> M_n (x) C(T) -> 0`.
//!
//! For index `a = (a_+, a_-)` and defect pair `(k_+, k_-)` the class `m̄`
//! lives in `D = Z^2 / (Za + nZ^2) ≅ Z/d (+) Z/n`, `d = gcd(a_+, a_-, n)`.
//! Two extensions are isomorphic exactly when their `n` agree, their indices
//! lie in one orbit of `η` (negate) and `ε` (swap), and, once aligned, their
//! defect pairs have equal image in `D`.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact_arith::{Integer, Natural};
use crate::{Error, Result};

/// Largest `n` accepted by [`brute_force_quotient`] by default.
pub const QUOTIENT_CAP: u64 = 32;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexPair {
    pub plus: Integer,
    pub minus: Integer,
}

impl IndexPair {
    pub fn new(plus: impl Into<Integer>, minus: impl Into<Integer>) -> Self {
        IndexPair {
            plus: plus.into(),
            minus: minus.into(),
        }
    }

    /// The index `(-1, 1)` of the extensions built from k-sequences.
    pub fn main_case() -> Self {
        IndexPair::new(-1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.plus, self.minus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefectPair {
    pub plus: Natural,
    pub minus: Natural,
}

impl DefectPair {
    pub fn new(plus: impl Into<Natural>, minus: impl Into<Natural>) -> Self {
        DefectPair {
            plus: plus.into(),
            minus: minus.into(),
        }
    }

    fn swapped(&self) -> Self {
        DefectPair {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }
}

/// The index symmetries. `η` negates the index and leaves the defects alone;
/// `ε` exchanges the two summands, swapping both index and defects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Identity,
    Eta,
    Epsilon,
    EpsilonEta,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Eta,
        Symmetry::Epsilon,
        Symmetry::EpsilonEta,
    ];

    pub fn apply_index(self, a: &IndexPair) -> IndexPair {
        match self {
            Symmetry::Identity => a.clone(),
            Symmetry::Eta => IndexPair::new(-&a.plus, -&a.minus),
            Symmetry::Epsilon => IndexPair::new(a.minus.clone(), a.plus.clone()),
            Symmetry::EpsilonEta => IndexPair::new(-&a.minus, -&a.plus),
        }
    }

    pub fn apply_defects(self, k: &DefectPair) -> DefectPair {
        match self {
            Symmetry::Identity | Symmetry::Eta => k.clone(),
            Symmetry::Epsilon | Symmetry::EpsilonEta => k.swapped(),
        }
    }
}

/// Lexicographic minimum of `{a, -a, (a_-, a_+), (-a_-, -a_+)}`.
pub fn symmetry_orbit(a: &IndexPair) -> IndexPair {
    Symmetry::ALL
        .iter()
        .map(|g| g.apply_index(a))
        .min()
        .unwrap()
}

/// The image of a defect pair in `Z/d (+) Z/n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DefectClass {
    pub d: Natural,
    pub n: Natural,
    /// Residue in `[0, d)`.
    pub first: Natural,
    /// Residue in `[0, n)`.
    pub second: Natural,
}

impl DefectClass {
    /// The class as a single integer in `[0, n)` when `d = 1`.
    pub fn as_integer(&self) -> Option<&Natural> {
        self.d.is_one().then_some(&self.second)
    }
}

impl fmt::Display for DefectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(m) => write!(f, "{m}"),
            None => write!(f, "({} mod {}, {} mod {})", self.first, self.d, self.second, self.n),
        }
    }
}

/// `D = Z^2 / (Za + nZ^2)` presented through the basis `{a', b}` of `Z^2`,
/// where `a = c a'` and `-a'_+ b_- + a'_- b_+ = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGroup {
    pub n: Natural,
    pub a: IndexPair,
    pub c: Integer,
    pub a_prime: IndexPair,
    pub b: IndexPair,
    pub d: Integer,
}

impl QuotientGroup {
    /// Order `d n` of the group.
    pub fn order(&self) -> Natural {
        self.d.magnitude() * &self.n
    }

    /// `k ↦ (k^T A b mod d, k^T A^T a' mod n)` with `A = [[0, -1], [1, 0]]`.
    pub fn project(&self, k_plus: &Integer, k_minus: &Integer) -> DefectClass {
        let n = Integer::from(self.n.clone());
        let first = k_minus * &self.b.plus - k_plus * &self.b.minus;
        let second = k_plus * &self.a_prime.minus - k_minus * &self.a_prime.plus;
        DefectClass {
            d: self.d.magnitude().clone(),
            n: self.n.clone(),
            first: first.mod_floor(&self.d).magnitude().clone(),
            second: second.mod_floor(&n).magnitude().clone(),
        }
    }

    pub fn project_defects(&self, k: &DefectPair) -> DefectClass {
        self.project(&Integer::from(k.plus.clone()), &Integer::from(k.minus.clone()))
    }
}

/// Builds `D` for index `a ≠ (0, 0)` and `n >= 1`.
///
/// `b` is fixed by `0 <= b_+ < |a'_+|` when `a'_+ ≠ 0`, and is `(a'_-, 0)`
/// when `a'_+ = 0`.
pub fn build_quotient(a: &IndexPair, n: &Natural) -> Result<QuotientGroup> {
    if a.is_zero() {
        return Err(Error::DegenerateIndex);
    }
    if n.is_zero() {
        return Err(Error::ZeroOrder);
    }
    let c = a.plus.gcd(&a.minus);
    let a_prime = IndexPair::new(&a.plus / &c, &a.minus / &c);
    let b = if a_prime.plus.is_zero() {
        IndexPair::new(a_prime.minus.clone(), 0)
    } else {
        let modulus = a_prime.plus.abs();
        let egcd = a_prime.minus.extended_gcd(&modulus);
        debug_assert!(egcd.gcd.is_one());
        let b_plus = egcd.x.mod_floor(&modulus);
        let b_minus = (&a_prime.minus * &b_plus - 1) / &a_prime.plus;
        IndexPair::new(b_plus, b_minus)
    };
    debug_assert!((-&a_prime.plus * &b.minus + &a_prime.minus * &b.plus).is_one());
    let d = c.gcd(&Integer::from(n.clone()));
    Ok(QuotientGroup {
        n: n.clone(),
        a: a.clone(),
        c,
        a_prime,
        b,
        d,
    })
}

/// `(k_+ + k_-) mod n`, the class for index `(-1, 1)`.
pub fn mbar_index_m11(defects: &DefectPair, n: &Natural) -> Natural {
    (&defects.plus + &defects.minus) % n
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionDescriptor {
    pub n: Natural,
    pub a: IndexPair,
    pub defects: DefectPair,
}

impl ExtensionDescriptor {
    pub fn new(n: impl Into<Natural>, a: IndexPair, defects: DefectPair) -> Self {
        ExtensionDescriptor {
            n: n.into(),
            a,
            defects,
        }
    }
}

/// `(n, canonical index, m̄)`; equal exactly for isomorphic extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantClass {
    pub n: Natural,
    pub index_orbit: IndexPair,
    pub mbar: DefectClass,
}

/// Moves `e` onto the orbit representative of its index; where several
/// symmetries do so, the least resulting class is kept.
pub fn invariant_class(e: &ExtensionDescriptor) -> Result<InvariantClass> {
    let canonical = symmetry_orbit(&e.a);
    let group = build_quotient(&canonical, &e.n)?;
    let mbar = Symmetry::ALL
        .iter()
        .filter(|g| g.apply_index(&e.a) == canonical)
        .map(|g| group.project_defects(&g.apply_defects(&e.defects)))
        .min()
        .unwrap();
    Ok(InvariantClass {
        n: e.n.clone(),
        index_orbit: canonical,
        mbar,
    })
}

pub fn is_isomorphic(e: &ExtensionDescriptor, f: &ExtensionDescriptor) -> Result<bool> {
    if e.n != f.n || symmetry_orbit(&e.a) != symmetry_orbit(&f.a) {
        return Ok(false);
    }
    let group = build_quotient(&e.a, &e.n)?;
    let target = group.project_defects(&e.defects);
    Ok(Symmetry::ALL
        .iter()
        .filter(|g| g.apply_index(&f.a) == e.a)
        .any(|g| group.project_defects(&g.apply_defects(&f.defects)) == target))
}

/// For index `(-1, 1)` with class `m` in `[0, n)`: `(p, ℓ) = (n/t, m/t)` when `t`
/// divides both.
pub fn factor_invariant(n: &Natural, m: &Natural, t: &Natural) -> Result<(Natural, Natural)> {
    let fail = || Error::NoFactorization {
        n: n.clone(),
        m: m.clone(),
        t: t.clone(),
    };
    if t.is_zero() {
        return Err(fail());
    }
    let m = m % n;
    if !n.is_multiple_of(t) || !m.is_multiple_of(t) {
        return Err(fail());
    }
    Ok((n / t, m / t))
}

/// Splits `E ≅ M_t (x) F` and returns the invariant `(p, ℓ)` of `F`.
pub fn tensor_factor(e: &ExtensionDescriptor, t: &Natural) -> Result<(Natural, Natural)> {
    if e.a != IndexPair::main_case() {
        return Err(Error::IndexNotMainCase);
    }
    if e.n.is_zero() {
        return Err(Error::ZeroOrder);
    }
    factor_invariant(&e.n, &mbar_index_m11(&e.defects, &e.n), t)
}

/// `Z^2 / (Za + nZ^2)` by coset enumeration over the box `[0, n)^2`.
#[derive(Debug, Clone)]
pub struct BruteForceQuotient {
    pub n: u64,
    /// Lexicographically least representative of each coset, sorted.
    pub reps: Vec<(u64, u64)>,
    /// `table[i][j]` is the coset of `reps[i] + reps[j]`.
    pub table: Vec<Vec<usize>>,
    class: Vec<usize>,
}

impl BruteForceQuotient {
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Coset index of `(x, y)`.
    pub fn class_of(&self, x: &Integer, y: &Integer) -> usize {
        let n = Integer::from(self.n);
        let x = x.mod_floor(&n).to_u64().unwrap();
        let y = y.mod_floor(&n).to_u64().unwrap();
        self.class[(x * self.n + y) as usize]
    }
}

pub fn brute_force_quotient(a: &IndexPair, n: u64) -> Result<BruteForceQuotient> {
    brute_force_quotient_capped(a, n, QUOTIENT_CAP)
}

pub fn brute_force_quotient_capped(a: &IndexPair, n: u64, cap: u64) -> Result<BruteForceQuotient> {
    if a.is_zero() {
        return Err(Error::DegenerateIndex);
    }
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > cap {
        return Err(Error::CapExceeded {
            predicted: Natural::from(n),
            cap,
        });
    }
    let modulus = Integer::from(n);
    let step_x = a.plus.mod_floor(&modulus).to_u64().unwrap();
    let step_y = a.minus.mod_floor(&modulus).to_u64().unwrap();
    let least = |x: u64, y: u64| {
        (0..n)
            .map(|t| ((x + t * step_x) % n, (y + t * step_y) % n))
            .min()
            .unwrap()
    };
    let mut reps: Vec<(u64, u64)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| least(x, y))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    let index: HashMap<(u64, u64), usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let class: Vec<usize> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| index[&least(x, y)])
        .collect();
    let table = reps
        .iter()
        .map(|&(x1, y1)| {
            reps.iter()
                .map(|&(x2, y2)| class[(((x1 + x2) % n) * n + (y1 + y2) % n) as usize])
                .collect()
        })
        .collect();
    Ok(BruteForceQuotient {
        n,
        reps,
        table,
        class,
    })
}
