//! Simplicial complexes on a fixed ground set `[n]` and their dual ideals.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::classes::{is_i_stable, StabilityVariant};
use crate::error::{Error, Result};
use crate::mono::{IrreducibleIdeal, Monomial, MonomialIdeal};
use crate::quotient::{search_admissible_order, OrderConstraint, SearchOutcome};
use crate::report::{PropertyReport, Witness};

/// Largest ground set for which full face enumeration is attempted.
pub const FACE_ENUMERATION_CAP: usize = 20;

/// Largest ground set for the relabeling search of the essential check.
pub const RELABELING_CAP: usize = 8;

/// A subset of the ground set, stored as a bit mask (bit `i` is vertex `i + 1`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    /// Builds a face from zero-based vertex indices.
    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        Face(vs.into_iter().fold(0, |m, v| m | 1 << v))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    /// Zero-based vertices in ascending order.
    pub fn vertices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.0 >> i & 1 == 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & other.0 == self.0
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// `[n] \ F`.
    pub fn complement(self, n: usize) -> Face {
        Face(!self.0 & full_mask(n))
    }

    /// The squarefree monomial `x^F`.
    pub fn monomial(self, n: usize) -> Monomial {
        Monomial::squarefree(n, self.vertices())
    }

    /// Lexicographic comparison of `x^F` and `x^G`.
    pub fn lex_cmp(self, other: Face) -> std::cmp::Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return std::cmp::Ordering::Equal;
        }
        let first = diff.trailing_zeros();
        if self.0 >> first & 1 == 1 {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.vertices().into_iter().map(|v| v + 1).collect();
        one_based.serialize(s)
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simplicial complex on `[n]` given by its facets.
///
/// No facets is the void complex; the single facet `{}` is the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Generates the complex from `faces`, keeping the inclusion-maximal ones.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Face>) -> Result<Self> {
        if n > 63 {
            return Err(Error::CapExceeded {
                what: "ground set size",
                cap: 63,
                found: n,
            });
        }
        let faces: Vec<Face> = faces.into_iter().collect();
        for f in &faces {
            if f.0 & !full_mask(n) != 0 {
                return Err(Error::OutOfRange(format!(
                    "face {f} is not a subset of [{n}]"
                )));
            }
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    fn from_faces_unchecked(n: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_by_key(|f| f.vertices());
        Self { n, facets }
    }

    /// Convenience constructor from one-based vertex lists; panics on bad input.
    pub fn from_sets(n: usize, sets: &[&[usize]]) -> Self {
        Self::new(
            n,
            sets.iter()
                .map(|s| Face::from_vertices(s.iter().map(|&v| v - 1))),
        )
        .expect("valid facets")
    }

    pub fn void(n: usize) -> Self {
        Self { n, facets: vec![] }
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        Self {
            n,
            facets: vec![Face::EMPTY],
        }
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        Self {
            n,
            facets: vec![Face(full_mask(n))],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// A single facet (this includes `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Union of the facets.
    pub fn vertex_set(&self) -> Face {
        Face(self.facets.iter().fold(0, |m, f| m | f.0))
    }

    /// All faces, ordered by size and then by vertex list.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if self.n > FACE_ENUMERATION_CAP {
            return Err(Error::CapExceeded {
                what: "ground set size for face enumeration",
                cap: FACE_ENUMERATION_CAP,
                found: self.n,
            });
        }
        let mut out: Vec<Face> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for f in &self.facets {
            // all submasks of f
            let mut sub = f.0;
            loop {
                if seen.insert(sub) {
                    out.push(Face(sub));
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f.0;
            }
        }
        out.sort_by_key(|f| (f.len(), f.vertices()));
        Ok(out)
    }

    /// `max |F| - 1`, with `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Faces of the complex that avoid `v`.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        Self::from_faces_unchecked(self.n, self.facets.iter().map(|f| f.without(v)).collect())
    }

    /// `{F : v ∉ F, F ∪ {v} ∈ Δ}`; void when `v` is not a vertex.
    pub fn link(&self, v: usize) -> SimplicialComplex {
        Self::from_faces_unchecked(
            self.n,
            self.facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.without(v))
                .collect(),
        )
    }

    /// `Δ^(r,s)`: faces of dimension at most `s` lying in a facet of dimension at least `r`.
    pub fn skeleton(&self, r: usize, s: usize) -> Result<SimplicialComplex> {
        let dim = self.dim().unwrap_or(-1);
        if r > s || s as isize > dim {
            return Err(Error::OutOfRange(format!(
                "skeleton indices need 0 <= r <= s <= dim = {dim}, got r = {r}, s = {s}"
            )));
        }
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() < r + 1 {
                continue;
            }
            if f.len() <= s + 1 {
                faces.push(*f);
            } else {
                for pick in crate::mono::combinations(&f.vertices(), s + 1) {
                    faces.push(Face::from_vertices(pick));
                }
            }
        }
        Ok(Self::from_faces_unchecked(self.n, faces))
    }

    /// `Δ^[i]`, the `i`-fold iterate of `Δ^[1] = <G : G ⊂ F ∈ F(Δ), |G| = |F| - 1>`.
    pub fn facet_skeleton(&self, i: usize) -> Result<SimplicialComplex> {
        if i == 0 {
            return Err(Error::OutOfRange(
                "facet skeleton index must be at least 1".into(),
            ));
        }
        let mut cur = self.clone();
        for _ in 0..i {
            if cur.facets.iter().any(|f| f.is_empty()) {
                return Err(Error::Precondition(
                    "the facet skeleton of {∅} is undefined".into(),
                ));
            }
            let faces = cur
                .facets
                .iter()
                .flat_map(|f| f.vertices().into_iter().map(move |v| f.without(v)))
                .collect();
            cur = Self::from_faces_unchecked(cur.n, faces);
        }
        Ok(cur)
    }

    /// Applies the vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        Self::from_faces_unchecked(
            self.n,
            self.facets
                .iter()
                .map(|f| Face::from_vertices(f.vertices().into_iter().map(|v| perm[v])))
                .collect(),
        )
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, face) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str(">")
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SimplicialComplex", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("facets", &self.facets)?;
        st.end()
    }
}

/// `I_{Δ∨} = <x^{F^c} : F ∈ F(Δ)>`; the void complex gives `<0>`.
pub fn dual_ideal(delta: &SimplicialComplex) -> MonomialIdeal {
    let n = delta.n;
    MonomialIdeal::new(n, delta.facets.iter().map(|f| f.complement(n).monomial(n)))
        .expect("dimensions agree")
}

fn squarefree_supports(ideal: &MonomialIdeal) -> Result<Vec<Face>> {
    if ideal.n() > 63 {
        return Err(Error::CapExceeded {
            what: "ground set size",
            cap: 63,
            found: ideal.n(),
        });
    }
    ideal
        .gens()
        .iter()
        .map(|g| {
            if g.is_squarefree() {
                Ok(Face(g.support_mask()))
            } else {
                Err(Error::NotSquarefree(g.to_string()))
            }
        })
        .collect()
}

/// The complex `{F : x^{F^c} ∈ I}` of a squarefree ideal.
pub fn eagon_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let n = ideal.n();
    let supports = squarefree_supports(ideal)?;
    Ok(SimplicialComplex::from_faces_unchecked(
        n,
        supports.into_iter().map(|s| s.complement(n)).collect(),
    ))
}

/// The Stanley–Reisner ideal, generated by the minimal nonfaces.
pub fn stanley_reisner(delta: &SimplicialComplex) -> Result<MonomialIdeal> {
    let n = delta.n;
    if n > FACE_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "ground set size for face enumeration",
            cap: FACE_ENUMERATION_CAP,
            found: n,
        });
    }
    let mut gens = Vec::new();
    for mask in 0..=full_mask(n) {
        let f = Face(mask);
        if !delta.contains(f) && f.vertices().iter().all(|&v| delta.contains(f.without(v))) {
            gens.push(f.monomial(n));
        }
    }
    MonomialIdeal::new(n, gens)
}

/// The complex of squarefree monomials outside a squarefree ideal.
pub fn sr_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let n = ideal.n();
    let supports = squarefree_supports(ideal)?;
    if n > FACE_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "ground set size for face enumeration",
            cap: FACE_ENUMERATION_CAP,
            found: n,
        });
    }
    let is_face = |f: Face| !supports.iter().any(|s| s.is_subset(f));
    let faces = (0..=full_mask(n))
        .map(Face)
        .filter(|&f| is_face(f) && (0..n).all(|v| f.contains(v) || !is_face(f.with(v))))
        .collect();
    Ok(SimplicialComplex::from_faces_unchecked(n, faces))
}

/// Shellability through linear quotients of the dual ideal. The witness on
/// success lists the facets in shelling order.
pub fn is_shellable(delta: &SimplicialComplex, cap: usize) -> PropertyReport {
    const NAME: &str = "shellable";
    let started = Instant::now();
    if delta.is_void() {
        return PropertyReport::holds(NAME, Some(Witness::Shelling { facets: vec![] }));
    }
    let n = delta.n;
    let dual = dual_ideal(delta);
    match search_admissible_order(&dual, OrderConstraint::None, cap) {
        Ok(SearchOutcome {
            order: Some(o),
            states,
        }) => {
            let facets = o
                .monomials()
                .iter()
                .map(|u| Face(u.support_mask()).complement(n))
                .collect();
            PropertyReport::holds(NAME, Some(Witness::Shelling { facets }))
                .with_stats(states, started)
        }
        Ok(SearchOutcome {
            order: None,
            states,
        }) => {
            PropertyReport::fails(NAME, Witness::Exhausted { states }).with_stats(states, started)
        }
        Err(e) => PropertyReport::unknown(NAME, e.to_string()),
    }
}

/// Default node budget for the vertex-decomposability search.
pub const VD_NODE_BUDGET: u64 = 1_000_000;

struct VdSearch {
    memo: HashMap<Vec<Face>, Option<Vec<usize>>>,
    nodes: u64,
    budget: u64,
}

impl VdSearch {
    /// Shedding sequence (depth first: vertex, then deletion, then link) or `None`.
    fn run(&mut self, delta: &SimplicialComplex) -> std::result::Result<Option<Vec<usize>>, ()> {
        if delta.facets.len() <= 1 {
            return Ok(Some(vec![]));
        }
        if let Some(hit) = self.memo.get(&delta.facets) {
            return Ok(hit.clone());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let mut result = None;
        for v in delta.vertex_set().vertices() {
            let del = delta.deletion(v);
            let lk = delta.link(v);
            if lk.facets.iter().any(|f| del.facets.contains(f)) {
                continue;
            }
            let Some(sd) = self.run(&del)? else { continue };
            let Some(sl) = self.run(&lk)? else { continue };
            let mut seq = vec![v];
            seq.extend(sd);
            seq.extend(sl);
            result = Some(seq);
            break;
        }
        self.memo.insert(delta.facets.clone(), result.clone());
        Ok(result)
    }
}

/// Vertex decomposability with shedding vertices tried in ascending order.
/// Simplices, `{∅}` and the void complex are accepted as base cases.
pub fn is_vertex_decomposable(delta: &SimplicialComplex) -> PropertyReport {
    is_vertex_decomposable_with_budget(delta, VD_NODE_BUDGET)
}

pub fn is_vertex_decomposable_with_budget(
    delta: &SimplicialComplex,
    budget: u64,
) -> PropertyReport {
    const NAME: &str = "vertex-decomposable";
    let started = Instant::now();
    let mut search = VdSearch {
        memo: HashMap::new(),
        nodes: 0,
        budget,
    };
    match search.run(delta) {
        Ok(Some(seq)) => PropertyReport::holds(
            NAME,
            Some(Witness::VertexShedding {
                vertices: seq.into_iter().map(|v| v + 1).collect(),
            }),
        )
        .with_stats(search.nodes, started),
        Ok(None) => PropertyReport::fails(
            NAME,
            Witness::Exhausted {
                states: search.nodes,
            },
        )
        .with_stats(search.nodes, started),
        Err(()) => PropertyReport::unknown(NAME, format!("node budget {budget} exhausted")),
    }
}

/// First violating facet pair `(B, A, t)` of the exchange condition, if any.
///
/// For facets `B >_lex A` with `t = min(B \ A)` some `j > t`, `j ∉ B`, must have
/// `(B \ {t}) ∪ {j} ∈ Δ`. This is exactly weak polymatroidality of the dual ideal.
fn co_polymatroidal_violation(delta: &SimplicialComplex) -> Option<(Face, Face, usize)> {
    let n = delta.n;
    for &b in &delta.facets {
        for &a in &delta.facets {
            if b.lex_cmp(a) != std::cmp::Ordering::Greater {
                continue;
            }
            let t = (b.0 & !a.0).trailing_zeros() as usize;
            let ok = (t + 1..n).any(|j| !b.contains(j) && delta.contains(b.without(t).with(j)));
            if !ok {
                return Some((b, a, t));
            }
        }
    }
    None
}

/// Weak co-polymatroidality; in essential mode every relabeling of `[n]` is tried
/// in lexicographic permutation order.
pub fn is_weakly_co_polymatroidal(
    delta: &SimplicialComplex,
    essential: bool,
) -> Result<PropertyReport> {
    let started = Instant::now();
    if !essential {
        const NAME: &str = "weakly-co-polymatroidal";
        return Ok(match co_polymatroidal_violation(delta) {
            None => PropertyReport::holds(NAME, None),
            Some((larger, smaller, t)) => PropertyReport::fails(
                NAME,
                Witness::FacetPair {
                    larger,
                    smaller,
                    t: t + 1,
                },
            ),
        });
    }
    const NAME: &str = "essential-weakly-co-polymatroidal";
    let n = delta.n;
    if n > RELABELING_CAP {
        return Err(Error::CapExceeded {
            what: "ground set size for relabeling search",
            cap: RELABELING_CAP,
            found: n,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut tried = 0u64;
    loop {
        tried += 1;
        if co_polymatroidal_violation(&delta.relabel(&perm)).is_none() {
            return Ok(PropertyReport::holds(
                NAME,
                Some(Witness::Relabeling {
                    perm: perm.iter().map(|v| v + 1).collect(),
                }),
            )
            .with_stats(tried, started));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(
        PropertyReport::fails(NAME, Witness::Exhausted { states: tried })
            .with_stats(tried, started),
    )
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Co-stability: the dual ideal is stable for `<x1^2, ..., xn^2>` in the given variant.
pub fn co_stable_check(delta: &SimplicialComplex, variant: StabilityVariant) -> PropertyReport {
    let name = match variant {
        StabilityVariant::Stable => "co-stable",
        StabilityVariant::Weak => "weakly-co-stable",
        StabilityVariant::Strong => "strongly-co-stable",
    };
    let dual = dual_ideal(delta);
    let mut r = is_i_stable(&dual, &IrreducibleIdeal::squares(delta.n), variant)
        .expect("squarefree ideals are in standard form for the squares");
    r.property = name.into();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize, sets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_sets(n, sets)
    }

    #[test]
    fn faces_dim_purity() {
        let s = SimplicialComplex::simplex(3);
        assert_eq!(s.faces().unwrap().len(), 8);
        assert_eq!(s.dim(), Some(2));
        assert!(s.is_pure());

        let d = c(3, &[&[3], &[1, 2]]);
        let faces: Vec<String> = d.faces().unwrap().iter().map(|f| f.to_string()).collect();
        assert_eq!(faces, ["{}", "{1}", "{2}", "{3}", "{1,2}"]);
        assert_eq!(d.dim(), Some(1));
        assert!(!d.is_pure());

        assert_eq!(SimplicialComplex::empty_face(3).dim(), Some(-1));
        assert_eq!(SimplicialComplex::void(3).dim(), None);
        assert_ne!(SimplicialComplex::void(3), SimplicialComplex::empty_face(3));
    }

    #[test]
    fn link_and_deletion() {
        let d = c(3, &[&[1, 2], &[3]]);
        assert_eq!(d.deletion(2), c(3, &[&[1, 2]]));
        assert_eq!(d.link(2), SimplicialComplex::empty_face(3));

        let d = c(4, &[&[1, 2], &[3]]);
        assert_eq!(d.deletion(3), d);
        assert!(d.link(3).is_void());

        let s = SimplicialComplex::simplex(3);
        assert_eq!(s.link(0), c(3, &[&[2, 3]]));
        assert_eq!(s.deletion(0), c(3, &[&[2, 3]]));
    }

    #[test]
    fn skeletons() {
        let d = c(3, &[&[1, 2], &[3]]);
        assert_eq!(d.skeleton(0, 0).unwrap(), c(3, &[&[1], &[2], &[3]]));
        assert_eq!(d.skeleton(1, 1).unwrap(), c(3, &[&[1, 2]]));
        assert!(d.skeleton(1, 0).is_err());
        assert!(d.skeleton(0, 2).is_err());

        let s = SimplicialComplex::simplex(4);
        assert_eq!(s.skeleton(0, 1).unwrap().facets().len(), 6);
        assert_eq!(s.skeleton(1, 1).unwrap(), s.skeleton(0, 1).unwrap());
    }

    #[test]
    fn facet_skeletons() {
        let s = SimplicialComplex::simplex(3);
        assert_eq!(
            s.facet_skeleton(1).unwrap(),
            c(3, &[&[1, 2], &[1, 3], &[2, 3]])
        );
        let d = c(3, &[&[1, 2], &[3]]);
        assert_eq!(d.facet_skeleton(1).unwrap(), c(3, &[&[1], &[2]]));
        assert_eq!(
            d.facet_skeleton(2).unwrap(),
            SimplicialComplex::empty_face(3)
        );
        assert!(d.facet_skeleton(3).is_err());
        assert!(d.facet_skeleton(0).is_err());
        let dual1 = dual_ideal(&d.facet_skeleton(1).unwrap());
        assert_eq!(dual1, dual_ideal(&d).wedge_maximal());
    }

    #[test]
    fn dual_and_eagon() {
        let d = c(3, &[&[1, 2], &[3]]);
        let dual = dual_ideal(&d);
        assert_eq!(dual, MonomialIdeal::from_exps(3, &[&[0, 0, 1], &[1, 1, 0]]));
        assert_eq!(eagon_complex(&dual).unwrap(), d);
        assert!(dual_ideal(&SimplicialComplex::simplex(3)).is_unit());
        assert!(dual_ideal(&SimplicialComplex::void(3)).is_zero());
        assert_eq!(
            dual_ideal(&SimplicialComplex::empty_face(3)),
            MonomialIdeal::from_exps(3, &[&[1, 1, 1]])
        );
        let bad = MonomialIdeal::from_exps(2, &[&[2, 0]]);
        assert!(matches!(eagon_complex(&bad), Err(Error::NotSquarefree(_))));
    }

    #[test]
    fn stanley_reisner_examples() {
        let boundary = c(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(
            stanley_reisner(&boundary).unwrap(),
            MonomialIdeal::from_exps(3, &[&[1, 1, 1]])
        );
        let i = MonomialIdeal::from_exps(2, &[&[1, 1]]);
        assert_eq!(sr_complex(&i).unwrap(), c(2, &[&[1], &[2]]));
        assert!(stanley_reisner(&SimplicialComplex::void(2))
            .unwrap()
            .is_unit());
        assert!(sr_complex(&MonomialIdeal::unit(2)).unwrap().is_void());
        assert_eq!(
            sr_complex(&MonomialIdeal::zero(2)).unwrap(),
            SimplicialComplex::simplex(2)
        );
        assert_eq!(
            sr_complex(&stanley_reisner(&boundary).unwrap()).unwrap(),
            boundary
        );
    }

    #[test]
    fn shellability_examples() {
        assert!(is_shellable(&SimplicialComplex::simplex(3), 12).is_holds());
        let d = c(3, &[&[3], &[1, 2]]);
        let r = is_shellable(&d, 12);
        assert!(r.is_holds());
        assert!(is_shellable(&c(4, &[&[1, 2], &[3, 4]]), 12).is_fails());
    }

    #[test]
    fn vertex_decomposability_examples() {
        assert!(is_vertex_decomposable(&SimplicialComplex::simplex(4)).is_holds());
        assert!(is_vertex_decomposable(&c(4, &[&[1, 2], &[3, 4]])).is_fails());
        let r = is_vertex_decomposable(&c(3, &[&[3], &[1, 2]]));
        assert!(r.is_holds());
        assert_eq!(
            r.witness,
            Some(Witness::VertexShedding { vertices: vec![3] })
        );
        assert!(is_vertex_decomposable(&SimplicialComplex::void(3)).is_holds());
        assert!(is_vertex_decomposable(&SimplicialComplex::empty_face(3)).is_holds());
    }

    #[test]
    fn co_polymatroidal_examples() {
        let i = MonomialIdeal::from_exps(
            5,
            &[
                &[1, 0, 1, 0, 0],
                &[0, 1, 1, 0, 0],
                &[1, 0, 0, 1, 1],
                &[0, 1, 0, 1, 1],
            ],
        );
        let d = eagon_complex(&i).unwrap();
        assert!(is_weakly_co_polymatroidal(&d, false).unwrap().is_holds());
        assert!(
            is_weakly_co_polymatroidal(&SimplicialComplex::simplex(3), false)
                .unwrap()
                .is_holds()
        );
        // two disjoint edges: dual <x3x4, x1x2> fails the exchange under every labeling
        let d = c(4, &[&[1, 2], &[3, 4]]);
        assert!(is_weakly_co_polymatroidal(&d, false).unwrap().is_fails());
        assert!(is_weakly_co_polymatroidal(&d, true).unwrap().is_fails());
        assert!(is_weakly_co_polymatroidal(&SimplicialComplex::simplex(9), true).is_err());
    }

    #[test]
    fn co_stability_examples() {
        let d = c(3, &[&[3], &[1, 2]]);
        assert!(co_stable_check(&d, StabilityVariant::Weak).is_holds());
        for v in [
            StabilityVariant::Stable,
            StabilityVariant::Weak,
            StabilityVariant::Strong,
        ] {
            assert!(co_stable_check(&SimplicialComplex::simplex(3), v).is_holds());
        }
    }

    #[test]
    fn permutations_are_enumerated_in_order() {
        let mut p = vec![0, 1, 2];
        let mut all = vec![p.clone()];
        while next_permutation(&mut p) {
            all.push(p.clone());
        }
        assert_eq!(all.len(), 6);
        assert_eq!(all[1], vec![0, 2, 1]);
        assert_eq!(all[5], vec![2, 1, 0]);
    }
}
