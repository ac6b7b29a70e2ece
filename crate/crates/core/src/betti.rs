//! Multigraded Betti numbers from upper Koszul simplicial complexes, exact
//! ranks, support-regularity and generalized Alexander duality.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::complex::{Face, SimplicialComplex, FACE_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::mono::{gminus, ExponentVector, IrreducibleIdeal, Monomial, MonomialIdeal, SupportMode};
use crate::report::{PropertyReport, Witness};

/// Coefficient field of the homology computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Characteristic {
    /// The rationals, with exact fraction-free elimination.
    #[default]
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(p: u64) -> Result<Self> {
        match p {
            0 => Ok(Characteristic::Zero),
            p if is_prime(p) && p < (1 << 31) => Ok(Characteristic::Prime(p)),
            p => Err(Error::Characteristic(p)),
        }
    }

    pub fn value(self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => p,
        }
    }
}

impl Serialize for Characteristic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.value())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Upper Koszul simplicial complex `{F ⊆ supp(a) : x^{a - e_F} ∈ I}`.
pub fn koszul_complex(ideal: &MonomialIdeal, a: &ExponentVector) -> Result<SimplicialComplex> {
    let n = ideal.n();
    if a.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.n(),
        });
    }
    if n > FACE_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "ground set size for face enumeration",
            cap: FACE_ENUMERATION_CAP,
            found: n,
        });
    }
    let base = Monomial::from_vector(a.clone());
    let supp = Face::from_vertices(a.support());
    let mut faces = Vec::new();
    let mut sub = supp.mask();
    loop {
        let f = Face::from_mask(sub);
        let m = f
            .vertices()
            .into_iter()
            .fold(base.clone(), |m, v| m.div_var(v).expect("v ∈ supp(a)"));
        if ideal.contains(&m) {
            faces.push(f);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & supp.mask();
    }
    SimplicialComplex::new(n, faces)
}

/// Faces of each dimension `-1..=dim`, indexed by `dim + 1`.
fn faces_by_dimension(delta: &SimplicialComplex) -> Result<Vec<Vec<Face>>> {
    let faces = delta.faces()?;
    let top = delta.dim().map_or(0, |d| (d + 2) as usize);
    let mut out = vec![Vec::new(); top];
    for f in faces {
        out[f.len()].push(f);
    }
    Ok(out)
}

/// Boundary matrix from faces of size `k` to faces of size `k - 1`, as rows of
/// `(column, ±1)` entries for each source face.
fn boundary(src: &[Face], dst: &[Face]) -> Vec<Vec<(usize, i64)>> {
    let index: std::collections::HashMap<Face, usize> =
        dst.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    src.iter()
        .map(|f| {
            f.vertices()
                .into_iter()
                .enumerate()
                .map(|(pos, v)| (index[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
                .collect()
        })
        .collect()
}

fn dense(rows: &[Vec<(usize, i64)>], cols: usize) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| {
            let mut v = vec![0; cols];
            for &(c, x) in r {
                v[c] = x;
            }
            v
        })
        .collect()
}

/// Rank over the rationals by fraction-free (Bareiss) elimination, first in
/// checked `i128`, falling back to big integers on overflow.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let wide: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(wide) {
        Some(r) => r,
        None => bareiss_big(
            m.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        ),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = a[rank][c]
                    .checked_mul(a[r][k])?
                    .checked_sub(a[r][c].checked_mul(a[rank][k])?)?;
                a[r][k] = v / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = &a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k];
                a[r][k] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over `F_p` by Gaussian elimination.
pub fn rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let pp = p as i64;
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(pp) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for k in c..cols {
            a[rank][k] = a[rank][k] * inv % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in c..cols {
                    a[r][k] = (a[r][k] + p - f * a[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn rank(m: &[Vec<i64>], ch: Characteristic) -> usize {
    match ch {
        Characteristic::Zero => rank_rational(m),
        Characteristic::Prime(p) => rank_mod_p(m, p),
    }
}

/// Ranks of all reduced homology groups `H̃_i`, indexed by `i + 1` for `i >= -1`.
pub fn reduced_homology(delta: &SimplicialComplex, ch: Characteristic) -> Result<Vec<usize>> {
    let by_dim = faces_by_dimension(delta)?;
    let ranks: Vec<usize> = (0..by_dim.len())
        .map(|k| {
            if k == 0 {
                0
            } else {
                let rows = boundary(&by_dim[k], &by_dim[k - 1]);
                rank(&dense(&rows, by_dim[k - 1].len()), ch)
            }
        })
        .collect();
    Ok((0..by_dim.len())
        .map(|k| {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            by_dim[k].len() - ranks[k] - next
        })
        .collect())
}

/// `dim H̃_i(Δ)` over the given field; `i = -1` is allowed.
pub fn homology_rank(delta: &SimplicialComplex, i: isize, ch: Characteristic) -> Result<usize> {
    if i < -1 {
        return Ok(0);
    }
    Ok(reduced_homology(delta, ch)?
        .get((i + 1) as usize)
        .copied()
        .unwrap_or(0))
}

/// Nonzero multigraded Betti numbers `β_{i,b}(I)`, with `β_0` counting the
/// minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub characteristic: Characteristic,
    pub entries: BTreeMap<(usize, ExponentVector), usize>,
}

#[derive(Serialize)]
struct Entry<'a> {
    i: usize,
    degree: &'a ExponentVector,
    rank: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|((i, degree), &rank)| Entry {
                i: *i,
                degree,
                rank,
            })
            .collect();
        let mut st = s.serialize_struct("BettiTable", 2)?;
        st.serialize_field("characteristic", &self.characteristic)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, b: &ExponentVector) -> usize {
        self.entries.get(&(i, b.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, r)| r)
            .sum()
    }

    /// `max |supp(b)| - i` over the nonzero entries.
    pub fn suppreg(&self) -> Option<isize> {
        self.entries
            .keys()
            .map(|(i, b)| b.support_degree() as isize - *i as isize)
            .max()
    }

    /// `max deg(b) - i` over the nonzero entries.
    pub fn reg(&self) -> Option<isize> {
        self.entries
            .keys()
            .map(|(i, b)| b.total_degree() as isize - *i as isize)
            .max()
    }
}

/// Generator cap for the subset route to Betti multidegrees.
pub const BETTI_GENERATOR_CAP: usize = 16;

/// Upper bound on candidate multidegrees explored by the grid route.
pub const BETTI_GRID_CAP: usize = 1 << 16;

/// Candidate multidegrees: every lcm of a nonempty set of generators.
///
/// Either the lcm closure of `G(I)` or a grid of vectors whose coordinates are
/// generator exponents, filtered to those equal to the lcm of the generators
/// dividing them; the smaller route is taken.
pub fn lcm_degrees(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    let n = ideal.n();
    let gens = ideal.gens();
    let axes: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut v: Vec<u32> = gens.iter().map(|g| g.exp(i)).chain([0]).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let grid = axes
        .iter()
        .try_fold(1usize, |acc, a| acc.checked_mul(a.len()));
    let subset_bound = 1usize.checked_shl(gens.len() as u32).unwrap_or(usize::MAX);
    match grid {
        Some(size) if size <= BETTI_GRID_CAP && size <= subset_bound => {
            let mut out = Vec::new();
            let mut idx = vec![0usize; n];
            loop {
                let b: Vec<u32> = (0..n).map(|i| axes[i][idx[i]]).collect();
                let bm = Monomial::new(b.clone());
                let below: Vec<&Monomial> = gens.iter().filter(|g| g.divides(&bm)).collect();
                if !below.is_empty() {
                    let l = below.iter().fold(Monomial::one(n), |acc, g| acc.lcm(g));
                    if l == bm {
                        out.push(ExponentVector::new(b));
                    }
                }
                let Some(k) = (0..n).find(|&k| idx[k] + 1 < axes[k].len()) else {
                    break;
                };
                idx[k] += 1;
                idx[..k].iter_mut().for_each(|x| *x = 0);
            }
            Ok(out)
        }
        _ if gens.len() <= BETTI_GENERATOR_CAP => {
            let mut seen: BTreeSet<Monomial> = BTreeSet::new();
            for g in gens {
                let next: Vec<Monomial> = seen.iter().map(|s| s.lcm(g)).collect();
                seen.insert(g.clone());
                seen.extend(next);
            }
            Ok(seen.into_iter().map(|m| m.vector().clone()).collect())
        }
        _ => Err(Error::CapExceeded {
            what: "generators for Betti multidegree enumeration",
            cap: BETTI_GENERATOR_CAP,
            found: gens.len(),
        }),
    }
}

/// `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))` at every lcm-lattice degree.
pub fn betti_table(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    let degrees = lcm_degrees(ideal)?;
    let per_degree: Vec<Vec<((usize, ExponentVector), usize)>> = degrees
        .par_iter()
        .map(|b| {
            let k = koszul_complex(ideal, b)?;
            let h = reduced_homology(&k, ch)?;
            Ok(h.into_iter()
                .enumerate()
                .filter(|&(_, r)| r > 0)
                .map(|(i, r)| ((i, b.clone()), r))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(BettiTable {
        characteristic: ch,
        entries: per_degree.into_iter().flatten().collect(),
    })
}

/// Support-regularity of a nonzero ideal.
pub fn suppreg(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::TrivialIdeal("<0>"));
    }
    let v = betti_table(ideal, Characteristic::Zero)?
        .suppreg()
        .expect("nonzero ideal has a generator");
    Ok(v.max(0) as usize)
}

/// Castelnuovo–Mumford regularity of a nonzero ideal.
pub fn reg(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::TrivialIdeal("<0>"));
    }
    let v = betti_table(ideal, Characteristic::Zero)?
        .reg()
        .expect("nonzero ideal has a generator");
    Ok(v.max(0) as usize)
}

/// `I = I<d>` and `suppreg(I) = d`.
pub fn is_support_linear(ideal: &MonomialIdeal, d: usize) -> Result<bool> {
    if ideal.is_zero() || ideal.support_component(d, SupportMode::Exact) != *ideal {
        return Ok(false);
    }
    Ok(suppreg(ideal)? == d)
}

/// Every nonzero `I<d>` is `d`-support-linear; components beyond the Betti
/// caps make the verdict unknown.
pub fn is_componentwise_support_linear(ideal: &MonomialIdeal) -> PropertyReport {
    const NAME: &str = "componentwise-support-linear";
    let mut unknown = None;
    for d in 0..=ideal.n() {
        let c = ideal.support_component(d, SupportMode::Exact);
        if c.is_zero() {
            continue;
        }
        match is_support_linear(&c, d) {
            Ok(true) => {}
            Ok(false) => {
                let detail = match suppreg(&c) {
                    Ok(s) => format!("suppreg of the component is {s}"),
                    Err(e) => e.to_string(),
                };
                return PropertyReport::fails(
                    NAME,
                    Witness::Component {
                        degree: d,
                        detail: Box::new(PropertyReport::fails(
                            format!("{d}-support-linear"),
                            Witness::Note { message: detail },
                        )),
                    },
                );
            }
            Err(e) => unknown = unknown.or(Some(format!("component {d}: {e}"))),
        }
    }
    match unknown {
        Some(msg) => PropertyReport::unknown(NAME, msg),
        None => PropertyReport::holds(NAME, None),
    }
}

/// `I^[g] = ∩ m^{g∖a}` over `x^a ∈ G(I)`.
pub fn alexander_dual_ideal(ideal: &MonomialIdeal, g: &ExponentVector) -> Result<MonomialIdeal> {
    let n = ideal.n();
    if g.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.n(),
        });
    }
    let mut acc = MonomialIdeal::unit(n);
    for u in ideal.gens() {
        let irr = IrreducibleIdeal::new(gminus(g, u.vector())?).to_ideal();
        acc = acc.intersection(&irr)?;
    }
    Ok(acc)
}

/// For `l = 0..=n`, whether `I<>=l>` is `l`-support-linear.
pub fn suppreg_truncation_profile(ideal: &MonomialIdeal) -> Result<BTreeMap<usize, bool>> {
    (0..=ideal.n())
        .map(|l| {
            let t = ideal.support_component(l, SupportMode::AtLeast);
            Ok((l, is_support_linear(&t, l)?))
        })
        .collect()
}

/// The smallest `l` with `I<>=l>` `l`-support-linear.
pub fn min_support_linear_truncation(ideal: &MonomialIdeal) -> Result<Option<usize>> {
    Ok(suppreg_truncation_profile(ideal)?
        .into_iter()
        .find(|&(_, ok)| ok)
        .map(|(l, _)| l))
}
