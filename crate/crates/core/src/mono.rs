//! Exponent vectors, monomials and monomial ideals.
//!
//! Variables are indexed from zero internally and printed as `x1..xn`.
//! Every [`MonomialIdeal`] stores its minimal generating set `G(I)` in the
//! canonical order: total degree ascending, ties broken lexicographically
//! with `x1 > x2 > ... > xn` (so `x1` is listed before `x2`).

use std::cmp::{Ordering, Reverse};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A vector in `N^n`. Used for multidegrees, the duality vector `g` and the
/// parameters of irreducible ideals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The squarefree vector with ones on `vars`.
    pub fn indicator(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut v = vec![0; n];
        for i in vars {
            v[i] = 1;
        }
        Self(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn support_degree(&self) -> usize {
        self.0.iter().filter(|&&e| e != 0).count()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn is_le(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

/// The vector `g \ a`: coordinate `g(i) + 1 - a(i)` where `a(i) >= 1`, zero elsewhere.
pub fn gminus(g: &ExponentVector, a: &ExponentVector) -> Result<ExponentVector> {
    if g.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: a.n(),
        });
    }
    if !a.is_le(g) {
        return Err(Error::NotBounded {
            a: a.0.clone(),
            g: g.0.clone(),
        });
    }
    Ok(ExponentVector(
        g.0.iter()
            .zip(&a.0)
            .map(|(&gi, &ai)| if ai >= 1 { gi + 1 - ai } else { 0 })
            .collect(),
    ))
}

/// A monomial `x^a` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: ExponentVector,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self {
            exps: ExponentVector(exps),
        }
    }

    pub fn from_vector(exps: ExponentVector) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self::new(v)
    }

    /// The squarefree monomial `prod_{i in vars} x_i`.
    pub fn squarefree(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::from_vector(ExponentVector::indicator(n, vars))
    }

    pub fn n(&self) -> usize {
        self.exps.n()
    }

    pub fn exps(&self) -> &[u32] {
        self.exps.as_slice()
    }

    pub fn vector(&self) -> &ExponentVector {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps.get(i)
    }

    pub fn degree(&self) -> u32 {
        self.exps.total_degree()
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.support()
    }

    pub fn support_degree(&self) -> usize {
        self.exps.support_degree()
    }

    /// Bitmask of the support. Only meaningful for `n <= 64`.
    pub fn support_mask(&self) -> u64 {
        self.exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub fn is_one(&self) -> bool {
        self.exps().iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps().iter().all(|&e| e <= 1)
    }

    /// Largest variable index in the support, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.exps().iter().rposition(|&e| e != 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps().iter().zip(other.exps()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps()
                .iter()
                .zip(other.exps())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps()
                .iter()
                .zip(other.exps())
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps()
                .iter()
                .zip(other.exps())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps()
                .iter()
                .zip(other.exps())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`, the generator of `<self> : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps()
                .iter()
                .zip(other.exps())
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut v = self.exps.0.clone();
        v[i] += 1;
        Monomial::new(v)
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exp(i) == 0 {
            return None;
        }
        let mut v = self.exps.0.clone();
        v[i] -= 1;
        Some(Monomial::new(v))
    }

    /// `self` with the exponent of `x_i` replaced by `e`.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut v = self.exps.0.clone();
        v[i] = e;
        Monomial::new(v)
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.n(),
            });
        }
        Ok(())
    }
}

/// Canonical order: degree ascending, then `x1 > x2 > ...` lexicographically.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), Reverse(self.exps())).cmp(&(other.degree(), Reverse(other.exps())))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Lexicographic comparison with `x1 > x2 > ... > xn`; `Greater` means `u >_lex v`.
pub fn lex_compare(u: &Monomial, v: &Monomial) -> Ordering {
    u.exps().cmp(v.exps())
}

/// The degree-compatible order used for stability arguments: `u < v` when
/// `deg u < deg v`, or degrees agree and at the largest index `s` where the
/// exponents differ, `u` has the smaller exponent.
pub fn shakin_compare(u: &Monomial, v: &Monomial) -> Ordering {
    u.degree()
        .cmp(&v.degree())
        .then_with(|| u.exps().iter().rev().cmp(v.exps().iter().rev()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// Value of a wedge product: either zero or `±` a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedMonomial {
    Zero,
    Term { sign: Sign, mono: Monomial },
}

impl SignedMonomial {
    pub fn monomial(&self) -> Option<&Monomial> {
        match self {
            SignedMonomial::Zero => None,
            SignedMonomial::Term { mono, .. } => Some(mono),
        }
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            SignedMonomial::Zero => None,
            SignedMonomial::Term { sign, .. } => Some(*sign),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedMonomial::Zero)
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedMonomial::Zero => f.write_str("0"),
            SignedMonomial::Term {
                sign: Sign::Plus,
                mono,
            } => write!(f, "{mono}"),
            SignedMonomial::Term {
                sign: Sign::Minus,
                mono,
            } => write!(f, "-{mono}"),
        }
    }
}

/// Wedge product of two monomials.
///
/// Zero when the supports meet; otherwise `(-1)^e m1*m2` where `e` counts the
/// inversions of the ascending support of `m1` followed by that of `m2`.
pub fn wedge(m1: &Monomial, m2: &Monomial) -> Result<SignedMonomial> {
    m2.check_dim(m1.n())?;
    let s1 = m1.support();
    let s2 = m2.support();
    if s1.iter().any(|i| m2.exp(*i) != 0) {
        return Ok(SignedMonomial::Zero);
    }
    let inversions: usize = s1
        .iter()
        .map(|&p| s2.iter().filter(|&&q| q < p).count())
        .sum();
    let sign = if inversions.is_multiple_of(2) {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Ok(SignedMonomial::Term {
        sign,
        mono: m1.mul(m2),
    })
}

/// Which support component to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SupportMode {
    /// `I<d>`: generated by the monomials of `I` with support-degree exactly `d`.
    Exact,
    /// `I<>=d>`: the sum of the exact components from `d` to `n`.
    AtLeast,
}

/// A monomial ideal given by its minimal generating set.
///
/// The zero ideal has no generators; the unit ideal has the single generator `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            g.check_dim(n)?;
        }
        Ok(minimalize(n, gens))
    }

    /// Convenience constructor from raw exponent rows; panics on ragged input.
    pub fn from_exps(n: usize, rows: &[&[u32]]) -> Self {
        let gens = rows.iter().map(|r| {
            assert_eq!(r.len(), n, "exponent row has wrong length");
            Monomial::new(r.to_vec())
        });
        minimalize(n, gens)
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The graded maximal ideal `<x1, ..., xn>`.
    pub fn maximal(n: usize) -> Self {
        minimalize(n, (0..n).map(|i| Monomial::var(n, i)))
    }

    pub fn principal(m: Monomial) -> Self {
        Self {
            n: m.n(),
            gens: vec![m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_trivial(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// True when every generator has degree one.
    pub fn is_generated_by_variables(&self) -> bool {
        !self.gens.is_empty() && self.gens.iter().all(|g| g.degree() == 1)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_support_degree(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::support_degree).max()
    }

    pub fn min_support_degree(&self) -> Option<usize> {
        self.gens.iter().map(Monomial::support_degree).min()
    }

    /// Largest exponent of any variable over `G(I)`.
    pub fn max_exponent(&self) -> u32 {
        self.gens
            .iter()
            .flat_map(|g| g.exps().iter().copied())
            .max()
            .unwrap_or(0)
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        Ok(minimalize(
            self.n,
            self.gens.iter().chain(&other.gens).cloned(),
        ))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        Ok(minimalize(
            self.n,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.mul(b))),
        ))
    }

    /// `I * m`.
    pub fn mul_maximal(&self) -> MonomialIdeal {
        minimalize(
            self.n,
            self.gens
                .iter()
                .flat_map(|g| (0..self.n).map(move |i| g.mul_var(i))),
        )
    }

    /// `I ∧ J`: generated by the products of generators with disjoint supports.
    pub fn wedge(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut prods = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                if let SignedMonomial::Term { mono, .. } = wedge(a, b)? {
                    prods.push(mono);
                }
            }
        }
        Ok(minimalize(self.n, prods))
    }

    /// `I ∧ m`.
    pub fn wedge_maximal(&self) -> MonomialIdeal {
        minimalize(
            self.n,
            self.gens.iter().flat_map(|g| {
                (0..self.n)
                    .filter(move |&i| g.exp(i) == 0)
                    .map(move |i| g.mul_var(i))
            }),
        )
    }

    /// `I : v` for a nontrivial ideal.
    pub fn colon(&self, v: &Monomial) -> Result<MonomialIdeal> {
        v.check_dim(self.n)?;
        if self.is_zero() {
            return Err(Error::TrivialIdeal("<0>"));
        }
        if self.is_unit() {
            return Err(Error::TrivialIdeal("<1>"));
        }
        Ok(minimalize(self.n, self.gens.iter().map(|g| g.colon(v))))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        Ok(minimalize(
            self.n,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))),
        ))
    }

    /// `I_d`: the ideal generated by the monomials of `I` of degree `d`.
    pub fn degree_component(&self, d: u32) -> MonomialIdeal {
        let mut out = Vec::new();
        for g in &self.gens {
            let k = g.degree();
            if k > d {
                continue;
            }
            for w in monomials_of_degree(self.n, d - k) {
                out.push(g.mul(&w));
            }
        }
        minimalize(self.n, out)
    }

    /// `I<d>` or `I<>=d>`.
    pub fn support_component(&self, d: usize, mode: SupportMode) -> MonomialIdeal {
        match mode {
            SupportMode::Exact => self.exact_support_component(d),
            SupportMode::AtLeast => minimalize(
                self.n,
                (d..=self.n).flat_map(|k| self.exact_support_component(k).gens),
            ),
        }
    }

    fn exact_support_component(&self, d: usize) -> MonomialIdeal {
        let mut out = Vec::new();
        for g in &self.gens {
            let s = g.support_degree();
            if s > d {
                continue;
            }
            let free: Vec<usize> = (0..self.n).filter(|&i| g.exp(i) == 0).collect();
            for pick in combinations(&free, d - s) {
                out.push(g.mul(&Monomial::squarefree(self.n, pick)));
            }
        }
        minimalize(self.n, out)
    }

    /// `I_*`: generated by the squarefree members of `G(I)`.
    pub fn squarefree_part(&self) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n,
            gens: self
                .gens
                .iter()
                .filter(|g| g.is_squarefree())
                .cloned()
                .collect(),
        }
    }

    /// `std_P(J) = <u in G(J) : u not in P>`.
    pub fn std_form(&self, p: &IrreducibleIdeal) -> Result<MonomialIdeal> {
        if p.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.n(),
            });
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: self
                .gens
                .iter()
                .filter(|g| !p.contains(g))
                .cloned()
                .collect(),
        })
    }

    /// Generators sorted lexicographically descending (`u1 >_lex u2 >_lex ...`).
    pub fn lex_descending(&self) -> Vec<Monomial> {
        let mut v = self.gens.clone();
        v.sort_by(|a, b| lex_compare(b, a));
        v
    }

    /// Drops variables that appear in no generator; returns the compressed
    /// ideal and the surviving original indices.
    pub fn compress(&self) -> (MonomialIdeal, Vec<usize>) {
        let used: Vec<usize> = (0..self.n)
            .filter(|&i| self.gens.iter().any(|g| g.exp(i) != 0))
            .collect();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(used.iter().map(|&i| g.exp(i)).collect()));
        (minimalize(used.len(), gens), used)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("<0>");
        }
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MonomialIdeal", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("gens", &self.gens)?;
        st.end()
    }
}

/// Removes duplicates and every monomial divisible by another one; returns
/// the result in canonical order.
pub fn minimalize(n: usize, monomials: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut all: Vec<Monomial> = monomials.into_iter().collect();
    all.sort();
    all.dedup();
    let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
    // Divisors have smaller degree, so they are already in `gens`.
    for m in all {
        if !gens.iter().any(|g| g.divides(&m)) {
            gens.push(m);
        }
    }
    MonomialIdeal { n, gens }
}

/// `<u> : v`, i.e. `u / gcd(u, v)`.
pub fn colon_principal(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    v.check_dim(u.n())?;
    Ok(u.colon(v))
}

/// An irreducible monomial ideal `m^a = <x_i^{a(i)} : a(i) >= 1>`.
/// A zero entry means the variable has no pure power in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IrreducibleIdeal {
    a: ExponentVector,
}

impl IrreducibleIdeal {
    pub fn new(a: ExponentVector) -> Self {
        Self { a }
    }

    /// `<x1^2, ..., xn^2>`, the parameter for squarefree stability.
    pub fn squares(n: usize) -> Self {
        Self::new(ExponentVector::new(vec![2; n]))
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn exponents(&self) -> &ExponentVector {
        &self.a
    }

    /// Exponent of the pure power of `x_i`, if present.
    pub fn power(&self, i: usize) -> Option<u32> {
        match self.a.get(i) {
            0 => None,
            k => Some(k),
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        (0..self.n()).any(|i| matches!(self.power(i), Some(k) if m.exp(i) >= k))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.n();
        minimalize(
            n,
            (0..n).filter_map(|i| self.power(i).map(|k| Monomial::var(n, i).with_exp(i, k))),
        )
    }
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// All `k`-element subsets of `items`, in lexicographic order of positions.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(n, rows)
    }

    #[test]
    fn support_examples() {
        assert_eq!(m(&[2, 0, 1]).support(), vec![0, 2]);
        assert!(Monomial::one(3).support().is_empty());
        assert_eq!(m(&[2, 1, 0, 0]).support(), vec![0, 1]);
        assert_eq!(m(&[2, 1, 0, 0]).support_degree(), 2);
    }

    #[test]
    fn wedge_signs() {
        let x = |i| Monomial::var(3, i);
        let plus = |mono| SignedMonomial::Term {
            sign: Sign::Plus,
            mono,
        };
        let minus = |mono| SignedMonomial::Term {
            sign: Sign::Minus,
            mono,
        };
        assert_eq!(wedge(&x(0), &x(1)).unwrap(), plus(m(&[1, 1, 0])));
        assert_eq!(wedge(&x(1), &x(0)).unwrap(), minus(m(&[1, 1, 0])));
        assert_eq!(wedge(&m(&[1, 0, 1]), &x(1)).unwrap(), minus(m(&[1, 1, 1])));
        assert!(wedge(&m(&[1, 1, 0]), &m(&[0, 2, 0])).unwrap().is_zero());
        assert!(matches!(
            wedge(&x(0), &Monomial::var(2, 0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn wedge_sign_matches_sorting_parity() {
        // Parity of the permutation sorting (1,3,2) by bubble sort.
        let mut seq = [1, 3, 2];
        let mut swaps = 0;
        for i in 0..seq.len() {
            for j in 0..seq.len() - 1 - i {
                if seq[j] > seq[j + 1] {
                    seq.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        let expected = if swaps % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        let w = wedge(&m(&[1, 0, 1]), &m(&[0, 1, 0])).unwrap();
        assert_eq!(w.sign(), Some(expected));
    }

    #[test]
    fn ideal_wedge_examples() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.wedge(&b).unwrap(), ideal(2, &[&[1, 1]]));

        let i = ideal(3, &[&[1, 1, 0], &[0, 3, 0]]);
        assert_eq!(
            i.wedge(&MonomialIdeal::maximal(3)).unwrap(),
            ideal(3, &[&[1, 3, 0], &[0, 3, 1], &[1, 1, 1]])
        );

        // a^2b, cd^2 against m: a^2bc, a^2bd, acd^2, bcd^2.
        let j = ideal(4, &[&[2, 1, 0, 0], &[0, 0, 1, 2]]);
        assert_eq!(
            j.wedge(&MonomialIdeal::maximal(4)).unwrap(),
            ideal(
                4,
                &[&[2, 1, 1, 0], &[2, 1, 0, 1], &[1, 0, 1, 2], &[0, 1, 1, 2]]
            )
        );
        assert_eq!(
            j.wedge_maximal(),
            j.wedge(&MonomialIdeal::maximal(4)).unwrap()
        );
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            minimalize(2, [m(&[1, 0]), m(&[1, 1])]).gens(),
            &[m(&[1, 0])]
        );
        assert_eq!(
            minimalize(3, [m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 1, 1])]).gens(),
            &[m(&[1, 1, 0]), m(&[0, 1, 1])]
        );
        assert_eq!(
            minimalize(2, [m(&[2, 1]), m(&[1, 1]), m(&[0, 1])]).gens(),
            &[m(&[0, 1])]
        );
    }

    #[test]
    fn canonical_order_lists_x1_first() {
        let i = ideal(3, &[&[0, 0, 2], &[0, 2, 0], &[1, 1, 0], &[2, 0, 0]]);
        assert_eq!(
            i.gens(),
            &[m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[0, 0, 2])]
        );
        let j = ideal(3, &[&[0, 1, 1], &[1, 0, 0]]);
        assert_eq!(j.gens(), &[m(&[1, 0, 0]), m(&[0, 1, 1])]);
    }

    #[test]
    fn colon_examples() {
        // gcd(a^2b, abc) = ab
        assert_eq!(m(&[2, 1, 0, 0]).gcd(&m(&[1, 1, 1, 0])), m(&[1, 1, 0, 0]));
        assert_eq!(
            colon_principal(&m(&[2, 1, 0, 0]), &m(&[1, 1, 1, 0])).unwrap(),
            m(&[1, 0, 0, 0])
        );
        assert!(colon_principal(&m(&[1, 2]), &m(&[1, 2])).unwrap().is_one());
        assert_eq!(
            colon_principal(&m(&[0, 0, 1, 2]), &m(&[2, 1, 0, 0])).unwrap(),
            m(&[0, 0, 1, 2])
        );

        let i = ideal(4, &[&[2, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 1, 1]]);
        assert_eq!(
            i.colon(&m(&[0, 0, 1, 2])).unwrap(),
            ideal(4, &[&[0, 1, 0, 0]])
        );
        assert!(ideal(1, &[&[1]]).colon(&m(&[1])).unwrap().is_unit());
        assert_eq!(
            ideal(3, &[&[1, 1, 0]]).colon(&m(&[0, 0, 1])).unwrap(),
            ideal(3, &[&[1, 1, 0]])
        );
        assert_eq!(
            MonomialIdeal::zero(2).colon(&m(&[1, 0])),
            Err(Error::TrivialIdeal("<0>"))
        );
        assert!(MonomialIdeal::unit(2).colon(&m(&[1, 0])).is_err());
    }

    #[test]
    fn degree_component_examples() {
        let i = ideal(4, &[&[0, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            i.degree_component(2),
            ideal(
                4,
                &[
                    &[0, 2, 0, 0],
                    &[1, 1, 0, 0],
                    &[0, 1, 1, 0],
                    &[0, 1, 0, 1],
                    &[0, 0, 1, 1]
                ]
            )
        );
        assert_eq!(ideal(1, &[&[1]]).degree_component(1), ideal(1, &[&[1]]));
        assert!(ideal(1, &[&[2]]).degree_component(1).is_zero());
    }

    #[test]
    fn support_component_examples() {
        let r1 = ideal(
            4,
            &[&[2, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 1, 1], &[0, 0, 1, 2]],
        );
        assert_eq!(
            r1.support_component(2, SupportMode::Exact),
            ideal(4, &[&[2, 1, 0, 0], &[0, 0, 1, 2]])
        );

        // bc, abd^2, b^3d^2, cd, ac, c^2, a^2bd
        let r2 = ideal(
            4,
            &[
                &[0, 1, 1, 0],
                &[1, 1, 0, 2],
                &[0, 3, 0, 2],
                &[0, 0, 1, 1],
                &[1, 0, 1, 0],
                &[0, 0, 2, 0],
                &[2, 1, 0, 1],
            ],
        );
        assert_eq!(
            r2.support_component(1, SupportMode::Exact),
            ideal(4, &[&[0, 0, 2, 0]])
        );
        assert_eq!(
            r2.support_component(3, SupportMode::Exact),
            ideal(
                4,
                &[
                    &[1, 1, 1, 0],
                    &[1, 0, 1, 1],
                    &[0, 1, 1, 1],
                    &[1, 1, 0, 2],
                    &[2, 1, 0, 1]
                ]
            )
        );
    }

    #[test]
    fn squarefree_part_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 3, 0]]);
        assert_eq!(i.squarefree_part(), ideal(3, &[&[1, 1, 0]]));
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sq.squarefree_part(), sq);
        assert_eq!(i.mul_maximal().squarefree_part(), ideal(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn std_form_examples() {
        let p = IrreducibleIdeal::new(vec![2, 2].into());
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(j.std_form(&p).unwrap(), ideal(2, &[&[1, 1]]));

        let sq = ideal(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(sq.std_form(&IrreducibleIdeal::squares(3)).unwrap(), sq);

        let j = ideal(2, &[&[3, 1]]);
        let p = IrreducibleIdeal::new(vec![2, 0].into());
        assert!(j.std_form(&p).unwrap().is_zero());
    }

    #[test]
    fn lex_examples() {
        let x = |i| Monomial::var(3, i);
        assert_eq!(lex_compare(&x(0), &x(1)), Ordering::Greater);
        assert_eq!(
            lex_compare(&m(&[1, 0, 1]), &m(&[0, 1, 1])),
            Ordering::Greater
        );
        assert_eq!(lex_compare(&m(&[0, 3, 0]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn shakin_examples() {
        assert_eq!(shakin_compare(&m(&[1]), &m(&[2])), Ordering::Less);
        assert_eq!(
            shakin_compare(&m(&[1, 1, 0]), &m(&[0, 1, 1])),
            Ordering::Less
        );
        assert_eq!(
            shakin_compare(&m(&[0, 1, 1]), &m(&[0, 1, 1])),
            Ordering::Equal
        );
    }

    #[test]
    fn gminus_examples() {
        let v = |e: &[u32]| ExponentVector::new(e.to_vec());
        assert_eq!(
            gminus(&v(&[1, 1, 1]), &v(&[1, 0, 1])).unwrap(),
            v(&[1, 0, 1])
        );
        assert_eq!(gminus(&v(&[2, 3]), &v(&[1, 2])).unwrap(), v(&[2, 2]));
        assert_eq!(gminus(&v(&[2, 2]), &v(&[2, 2])).unwrap(), v(&[1, 1]));
        assert!(matches!(
            gminus(&v(&[1, 1]), &v(&[2, 0])),
            Err(Error::NotBounded { .. })
        ));
    }

    #[test]
    fn trivial_ideals_are_distinct() {
        let z = MonomialIdeal::zero(3);
        let u = MonomialIdeal::unit(3);
        assert_ne!(z, u);
        assert!(z.is_zero() && z.is_trivial() && !z.is_unit());
        assert!(u.is_unit() && u.is_trivial() && !u.is_zero());
        assert!(u.contains(&Monomial::one(3)));
        assert!(!z.contains(&Monomial::one(3)));
    }

    #[test]
    fn irreducible_membership() {
        let p = IrreducibleIdeal::new(vec![2, 0, 3].into());
        assert!(p.contains(&m(&[2, 5, 0])));
        assert!(!p.contains(&m(&[1, 9, 2])));
        assert_eq!(p.to_ideal(), ideal(3, &[&[2, 0, 0], &[0, 0, 3]]));
    }

    #[test]
    fn monomials_of_degree_counts() {
        // C(n + d - 1, d)
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one(2)]);
    }
}
