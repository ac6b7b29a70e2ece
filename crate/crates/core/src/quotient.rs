//! Linear quotients: verifying and searching admissible orders, Popescu
//! orders, the constructive order on `I ∧ m`, componentwise checks and the
//! compatibility test for support components.

use std::collections::{BTreeMap, HashSet};
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mono::{minimalize, Monomial, MonomialIdeal, SupportMode};
use crate::report::{AdmissibilityCertificate, CertificateEntry, PropertyReport, Witness};

/// Default bound on the number of generators an order search accepts.
pub const DEFAULT_GENERATOR_CAP: usize = 12;

/// Hard limit imposed by the subset encoding of the search state.
pub const MAX_GENERATOR_CAP: usize = 63;

/// A sequence over `G(I)`, stored as positions into the canonical generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorOrder {
    ideal: MonomialIdeal,
    seq: Vec<usize>,
}

impl GeneratorOrder {
    pub fn new(ideal: MonomialIdeal, seq: Vec<usize>) -> Result<Self> {
        let m = ideal.len();
        let mut seen = vec![false; m];
        if seq.len() != m {
            return Err(Error::InvalidOrder(format!(
                "expected {m} positions, got {}",
                seq.len()
            )));
        }
        for &p in &seq {
            if p >= m || seen[p] {
                return Err(Error::InvalidOrder(format!(
                    "position {p} repeated or out of range"
                )));
            }
            seen[p] = true;
        }
        Ok(Self { ideal, seq })
    }

    /// The order given by an explicit list, which must be exactly `G(I)` of the
    /// ideal it generates.
    pub fn from_monomials(n: usize, list: Vec<Monomial>) -> Result<Self> {
        let ideal = MonomialIdeal::new(n, list.iter().cloned())?;
        if ideal.len() != list.len() {
            return Err(Error::InvalidOrder(
                "list contains repeated or redundant generators".into(),
            ));
        }
        let seq = list
            .iter()
            .map(|u| {
                ideal
                    .gens()
                    .iter()
                    .position(|g| g == u)
                    .expect("u is minimal")
            })
            .collect();
        Self::new(ideal, seq)
    }

    pub fn canonical(ideal: MonomialIdeal) -> Self {
        let seq = (0..ideal.len()).collect();
        Self { ideal, seq }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn monomials(&self) -> Vec<Monomial> {
        self.seq
            .iter()
            .map(|&p| self.ideal.gens()[p].clone())
            .collect()
    }

    pub fn is_degree_increasing(&self) -> bool {
        self.monomials()
            .windows(2)
            .all(|w| w[0].degree() <= w[1].degree())
    }

    pub fn is_support_degree_increasing(&self) -> bool {
        self.monomials()
            .windows(2)
            .all(|w| w[0].support_degree() <= w[1].support_degree())
    }
}

impl Serialize for GeneratorOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.monomials().serialize(s)
    }
}

/// Shape restriction for [`find_admissible_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderConstraint {
    None,
    DegreeIncreasing,
    SupportDegreeIncreasing,
}

/// Minimal generators of `<prefix> : u` that are not variables, if any.
fn nonlinear_colon(prefix: &[Monomial], u: &Monomial) -> Option<(Monomial, MonomialIdeal)> {
    let colon = minimalize(u.n(), prefix.iter().map(|p| p.colon(u)));
    colon
        .gens()
        .iter()
        .find(|g| g.degree() != 1)
        .cloned()
        .map(|g| (g, colon))
}

/// Checks that every colon ideal `<u_1..u_{j-1}> : u_j` is generated by
/// variables, and on success returns a `(k, d)` certificate for every pair.
pub fn is_admissible_order(order: &GeneratorOrder) -> PropertyReport {
    const NAME: &str = "admissible-order";
    let started = Instant::now();
    let us = order.monomials();
    for j in 1..us.len() {
        if let Some((generator, colon)) = nonlinear_colon(&us[..j], &us[j]) {
            return PropertyReport::fails(
                NAME,
                Witness::NonLinearColon {
                    position: j,
                    generator,
                    colon,
                },
            )
            .with_stats(j as u64, started);
        }
    }
    let mut entries = Vec::new();
    for j in 1..us.len() {
        let linear: Vec<(usize, usize)> = (0..j)
            .filter_map(|k| {
                let q = us[k].colon(&us[j]);
                (q.degree() == 1).then(|| (k, q.support()[0]))
            })
            .collect();
        for i in 0..j {
            let qi = us[i].colon(&us[j]);
            let &(k, var) = linear
                .iter()
                .find(|(_, v)| qi.exp(*v) > 0)
                .expect("linear colon ideal covers every quotient");
            entries.push(CertificateEntry { i, j, k, var });
        }
    }
    PropertyReport::holds(
        NAME,
        Some(Witness::Certificate(AdmissibilityCertificate {
            order: us,
            entries,
        })),
    )
    .with_stats(order.len() as u64, started)
}

/// Result of an order search together with the number of visited states.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub order: Option<GeneratorOrder>,
    pub states: u64,
}

/// Depth-first search over admissible prefixes.
///
/// Whether `c` may follow a prefix depends only on the *set* of earlier
/// generators, so dead sets are memoized. `block[p]` constrains the
/// sequence to be non-decreasing in block index. Candidates are tried in
/// canonical generator order, so the first order found is deterministic.
fn search(ideal: &MonomialIdeal, block: &[usize], cap: usize) -> Result<SearchOutcome> {
    let gens = ideal.gens();
    let m = gens.len();
    if m > cap.min(MAX_GENERATOR_CAP) {
        return Err(Error::CapExceeded {
            what: "generators in order search",
            cap: cap.min(MAX_GENERATOR_CAP),
            found: m,
        });
    }
    if m == 0 {
        return Ok(SearchOutcome {
            order: Some(GeneratorOrder::canonical(ideal.clone())),
            states: 0,
        });
    }
    // quot[i][c] = support mask of u_i / gcd(u_i, u_c); lin[i][c] = its variable when linear.
    let mut quot = vec![vec![0u64; m]; m];
    let mut lin = vec![vec![0u64; m]; m];
    for i in 0..m {
        for c in 0..m {
            if i == c {
                continue;
            }
            let q = gens[i].colon(&gens[c]);
            quot[i][c] = q.support_mask();
            if q.degree() == 1 {
                lin[i][c] = q.support_mask();
            }
        }
    }
    let can_follow = |set: u64, c: usize| -> bool {
        let mut vars = 0u64;
        for i in 0..m {
            if set >> i & 1 == 1 {
                vars |= lin[i][c];
            }
        }
        (0..m).all(|i| set >> i & 1 == 0 || quot[i][c] & vars != 0)
    };

    struct Ctx<'a, F: Fn(u64, usize) -> bool> {
        m: usize,
        block: &'a [usize],
        can_follow: F,
        dead: HashSet<u64>,
        states: u64,
        path: Vec<usize>,
    }

    fn dfs<F: Fn(u64, usize) -> bool>(ctx: &mut Ctx<'_, F>, set: u64) -> bool {
        ctx.states += 1;
        if ctx.path.len() == ctx.m {
            return true;
        }
        if ctx.dead.contains(&set) {
            return false;
        }
        let next_block = (0..ctx.m)
            .filter(|&p| set >> p & 1 == 0)
            .map(|p| ctx.block[p])
            .min()
            .expect("some generator remains");
        for c in 0..ctx.m {
            if set >> c & 1 == 1 || ctx.block[c] != next_block {
                continue;
            }
            if !(ctx.can_follow)(set, c) {
                continue;
            }
            ctx.path.push(c);
            if dfs(ctx, set | 1 << c) {
                return true;
            }
            ctx.path.pop();
        }
        ctx.dead.insert(set);
        false
    }

    let mut ctx = Ctx {
        m,
        block,
        can_follow,
        dead: HashSet::new(),
        states: 0,
        path: Vec::with_capacity(m),
    };
    let found = dfs(&mut ctx, 0);
    let order = if found {
        Some(GeneratorOrder::new(ideal.clone(), ctx.path)?)
    } else {
        None
    };
    Ok(SearchOutcome {
        order,
        states: ctx.states,
    })
}

/// Searches an admissible order of `G(I)` satisfying `constraint`.
pub fn find_admissible_order(
    ideal: &MonomialIdeal,
    constraint: OrderConstraint,
    cap: usize,
) -> Result<Option<GeneratorOrder>> {
    Ok(search_admissible_order(ideal, constraint, cap)?.order)
}

/// Like [`find_admissible_order`] but also reports the search effort.
pub fn search_admissible_order(
    ideal: &MonomialIdeal,
    constraint: OrderConstraint,
    cap: usize,
) -> Result<SearchOutcome> {
    if ideal.is_zero() {
        return Err(Error::TrivialIdeal("<0>"));
    }
    let block: Vec<usize> = ideal
        .gens()
        .iter()
        .map(|g| match constraint {
            OrderConstraint::None => 0,
            OrderConstraint::DegreeIncreasing => g.degree() as usize,
            OrderConstraint::SupportDegreeIncreasing => g.support_degree(),
        })
        .collect();
    search(ideal, &block, cap)
}

/// Searches an admissible order whose initial segment is exactly `prefix`
/// (in any internal order).
pub fn find_admissible_order_with_prefix(
    ideal: &MonomialIdeal,
    prefix: &[Monomial],
    cap: usize,
) -> Result<Option<GeneratorOrder>> {
    if ideal.is_zero() {
        return Err(Error::TrivialIdeal("<0>"));
    }
    let block: Vec<usize> = ideal
        .gens()
        .iter()
        .map(|g| usize::from(!prefix.contains(g)))
        .collect();
    Ok(search(ideal, &block, cap)?.order)
}

/// Checks the Popescu conditions on `order`.
///
/// Strong mode (`weak == false`) with split index `s` (1-based) requires
/// (a) `supp(u_1) = supp(u_j)` for `j <= s`, (b) every colon ideal for
/// positions after `s` generated by pure powers, and (c) `supp(u_i) ⊊ supp(u_j)`
/// only when `i < j`. Weak mode checks (b) alone with `s = 1`.
pub fn is_popescu_order(order: &GeneratorOrder, s: usize, weak: bool) -> Result<PropertyReport> {
    let name = if weak {
        "weak-popescu-order"
    } else {
        "popescu-order"
    };
    let us = order.monomials();
    let m = us.len();
    let s = if weak { 1 } else { s };
    if m > 0 && !(1..=m).contains(&s) {
        return Err(Error::OutOfRange(format!("split index {s} not in 1..={m}")));
    }
    if !weak {
        let first = us.first().map(Monomial::support_mask);
        for j in 1..s {
            if Some(us[j].support_mask()) != first {
                return Ok(PropertyReport::fails(
                    name,
                    Witness::Popescu {
                        condition: 'a',
                        positions: vec![0, j],
                    },
                ));
            }
        }
    }
    for i in s..m {
        let colon = minimalize(us[i].n(), us[..i].iter().map(|p| p.colon(&us[i])));
        if colon.gens().iter().any(|g| g.support_degree() != 1) {
            return Ok(PropertyReport::fails(
                name,
                Witness::Popescu {
                    condition: 'b',
                    positions: vec![i],
                },
            ));
        }
    }
    if !weak {
        for i in 0..m {
            for j in 0..i {
                let (si, sj) = (us[i].support_mask(), us[j].support_mask());
                // supp(u_i) strictly inside supp(u_j) with i after j
                if si & sj == si && si != sj {
                    return Ok(PropertyReport::fails(
                        name,
                        Witness::Popescu {
                            condition: 'c',
                            positions: vec![i, j],
                        },
                    ));
                }
            }
        }
    }
    Ok(PropertyReport::holds(
        name,
        Some(Witness::Order { order: us }),
    ))
}

/// Builds the ordered generating set of `I ∧ m` from an admissible,
/// support-degree increasing order of `I`: all products `u_i x_j` with
/// `j ∉ supp(u_i)`, in lexicographic pair order, dropping `(r, s)` whenever
/// an earlier generator's product `u_i x_j` (`i < r`) divides `u_r x_s`.
pub fn wedge_order_construction(order: &GeneratorOrder) -> Result<GeneratorOrder> {
    if !order.is_support_degree_increasing() {
        return Err(Error::Precondition(
            "order is not support-degree increasing".into(),
        ));
    }
    if !is_admissible_order(order).is_holds() {
        return Err(Error::Precondition("order is not admissible".into()));
    }
    let us = order.monomials();
    let n = order.ideal().n();
    let pairs: Vec<(usize, Monomial)> = us
        .iter()
        .enumerate()
        .flat_map(|(i, u)| {
            (0..n)
                .filter(move |&j| u.exp(j) == 0)
                .map(move |j| (i, u.mul_var(j)))
        })
        .collect();
    let kept: Vec<Monomial> = pairs
        .iter()
        .filter(|(r, w)| !pairs.iter().any(|(i, v)| i < r && v.divides(w)))
        .map(|(_, w)| w.clone())
        .collect();
    GeneratorOrder::from_monomials(n, kept)
}

/// Which family of components [`componentwise_lq`] examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentMode {
    /// `I_d` for `d` between the smallest and largest generator degree.
    Degree,
    /// Every nonzero `I<d>`.
    Support,
    /// Every nonzero `I<>=d>` for `d` in `1..=n`.
    SupportAtLeast,
}

/// The nonzero components of `I` in the given mode, keyed by `d`.
pub fn components(ideal: &MonomialIdeal, mode: ComponentMode) -> BTreeMap<usize, MonomialIdeal> {
    let mut out = BTreeMap::new();
    match mode {
        ComponentMode::Degree => {
            if let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) {
                for d in lo..=hi {
                    out.insert(d as usize, ideal.degree_component(d));
                }
            }
        }
        ComponentMode::Support => {
            for d in 0..=ideal.n() {
                let c = ideal.support_component(d, SupportMode::Exact);
                if !c.is_zero() {
                    out.insert(d, c);
                }
            }
        }
        ComponentMode::SupportAtLeast => {
            for d in 1..=ideal.n() {
                let c = ideal.support_component(d, SupportMode::AtLeast);
                if !c.is_zero() {
                    out.insert(d, c);
                }
            }
        }
    }
    out
}

/// Runs the unconstrained order search on every nonzero component; a
/// component above the generator cap is reported as unknown.
pub fn componentwise_lq(
    ideal: &MonomialIdeal,
    mode: ComponentMode,
    cap: usize,
) -> BTreeMap<usize, PropertyReport> {
    components(ideal, mode)
        .into_iter()
        .map(|(d, c)| (d, linear_quotients_report(&c, cap)))
        .collect()
}

/// Aggregates [`componentwise_lq`] into a single verdict.
pub fn componentwise_lq_report(
    ideal: &MonomialIdeal,
    mode: ComponentMode,
    cap: usize,
) -> PropertyReport {
    let name = match mode {
        ComponentMode::Degree => "componentwise-lq",
        ComponentMode::Support => "support-componentwise-lq",
        ComponentMode::SupportAtLeast => "support-at-least-lq",
    };
    let per = componentwise_lq(ideal, mode, cap);
    if let Some((&d, r)) = per.iter().find(|(_, r)| r.is_fails()) {
        return PropertyReport::fails(
            name,
            Witness::Component {
                degree: d,
                detail: Box::new(r.clone()),
            },
        );
    }
    if let Some((&d, _)) = per.iter().find(|(_, r)| !r.is_holds()) {
        return PropertyReport::unknown(name, format!("component {d} exceeds the generator cap"));
    }
    PropertyReport::holds(name, None)
}

/// Verdict of the unconstrained search on one ideal.
pub fn linear_quotients_report(ideal: &MonomialIdeal, cap: usize) -> PropertyReport {
    constrained_lq_report(ideal, OrderConstraint::None, cap)
}

pub fn constrained_lq_report(
    ideal: &MonomialIdeal,
    constraint: OrderConstraint,
    cap: usize,
) -> PropertyReport {
    let name = match constraint {
        OrderConstraint::None => "linear-quotients",
        OrderConstraint::DegreeIncreasing => "linear-quotients-degree-increasing",
        OrderConstraint::SupportDegreeIncreasing => "linear-quotients-support-degree-increasing",
    };
    let started = Instant::now();
    if ideal.is_zero() {
        return PropertyReport::holds(name, None);
    }
    match search_admissible_order(ideal, constraint, cap) {
        Ok(SearchOutcome {
            order: Some(o),
            states,
        }) => PropertyReport::holds(
            name,
            Some(Witness::Order {
                order: o.monomials(),
            }),
        )
        .with_stats(states, started),
        Ok(SearchOutcome {
            order: None,
            states,
        }) => {
            PropertyReport::fails(name, Witness::Exhausted { states }).with_stats(states, started)
        }
        Err(e) => PropertyReport::unknown(name, e.to_string()),
    }
}

/// Looks for admissible orders `σ_d` of every support component `I<d>` such
/// that the generators of `I<d-1> ∧ m` lying in `G(I<d>)` open `σ_d`. On
/// success the witness is the induced support-degree increasing order of `I`.
pub fn pack_compatibility(ideal: &MonomialIdeal, cap: usize) -> Result<PropertyReport> {
    const NAME: &str = "pack-compatibility";
    let started = Instant::now();
    let comps = components(ideal, ComponentMode::Support);
    for c in comps.values() {
        if c.len() > cap {
            return Err(Error::CapExceeded {
                what: "generators in a support component",
                cap,
                found: c.len(),
            });
        }
    }
    let mut sigma: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for (&d, comp) in &comps {
        let prefix: Vec<Monomial> = match d.checked_sub(1).and_then(|p| comps.get(&p)) {
            Some(prev) => prev
                .wedge_maximal()
                .gens()
                .iter()
                .filter(|w| comp.gens().contains(w))
                .cloned()
                .collect(),
            None => vec![],
        };
        match find_admissible_order_with_prefix(comp, &prefix, cap)? {
            Some(o) => {
                sigma.insert(d, o.monomials());
            }
            None => {
                return Ok(PropertyReport::fails(
                    NAME,
                    Witness::Pack {
                        component: d,
                        prefix,
                    },
                )
                .with_stats(d as u64, started))
            }
        }
    }
    let mut induced: Vec<Monomial> = ideal.gens().to_vec();
    induced.sort_by_key(|u| {
        let d = u.support_degree();
        let pos = sigma[&d]
            .iter()
            .position(|w| w == u)
            .expect("G(I) ∩ I<d> ⊆ G(I<d>)");
        (d, pos)
    });
    Ok(
        PropertyReport::holds(NAME, Some(Witness::Order { order: induced }))
            .with_stats(comps.len() as u64, started),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn order(n: usize, rows: &[&[u32]]) -> GeneratorOrder {
        GeneratorOrder::from_monomials(n, rows.iter().map(|r| m(r)).collect()).unwrap()
    }

    /// a^2b, abc, bcd, cd^2
    fn four_generator() -> GeneratorOrder {
        order(
            4,
            &[&[2, 1, 0, 0], &[1, 1, 1, 0], &[0, 1, 1, 1], &[0, 0, 1, 2]],
        )
    }

    /// bc, abd^2, b^3d^2, cd, ac, c^2, a^2bd
    fn seven_generator() -> GeneratorOrder {
        order(
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
        )
    }

    #[test]
    fn admissible_examples() {
        let r = is_admissible_order(&four_generator());
        assert!(r.is_holds());
        match r.witness {
            Some(Witness::Certificate(c)) => assert!(c.verify()),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(is_admissible_order(&seven_generator()).is_holds());
        assert!(is_admissible_order(&order(4, &[&[2, 1, 0, 0], &[0, 0, 1, 2]])).is_fails());
        assert!(is_admissible_order(&order(4, &[&[0, 0, 1, 2], &[2, 1, 0, 0]])).is_fails());
        assert!(is_admissible_order(&order(2, &[&[1, 1]])).is_holds());
    }

    #[test]
    fn from_monomials_rejects_redundant_lists() {
        assert!(GeneratorOrder::from_monomials(2, vec![m(&[1, 0]), m(&[1, 1])]).is_err());
        assert!(GeneratorOrder::from_monomials(2, vec![m(&[1, 0]), m(&[1, 0])]).is_err());
    }

    #[test]
    fn search_examples() {
        let i1 = four_generator().ideal().clone();
        assert!(find_admissible_order(&i1, OrderConstraint::None, 12)
            .unwrap()
            .is_some());
        assert!(
            find_admissible_order(&i1, OrderConstraint::SupportDegreeIncreasing, 12)
                .unwrap()
                .is_none()
        );
        let i2 = seven_generator().ideal().clone();
        assert!(
            find_admissible_order(&i2, OrderConstraint::SupportDegreeIncreasing, 12)
                .unwrap()
                .is_none()
        );
        let vars = MonomialIdeal::maximal(2);
        for c in [
            OrderConstraint::None,
            OrderConstraint::DegreeIncreasing,
            OrderConstraint::SupportDegreeIncreasing,
        ] {
            let o = find_admissible_order(&vars, c, 12).unwrap().unwrap();
            assert_eq!(o.monomials(), vec![m(&[1, 0]), m(&[0, 1])]);
        }
    }

    #[test]
    fn search_respects_cap() {
        let big = MonomialIdeal::maximal(13);
        assert!(matches!(
            find_admissible_order(&big, OrderConstraint::None, 12),
            Err(Error::CapExceeded { found: 13, .. })
        ));
        assert!(find_admissible_order(&big, OrderConstraint::None, 13)
            .unwrap()
            .is_some());
    }

    #[test]
    fn popescu_examples() {
        // x1, x2 is support-degree increasing and admissible.
        let o = order(2, &[&[1, 0], &[0, 1]]);
        assert!(is_popescu_order(&o, 1, false).unwrap().is_holds());
        // split s = 2 fails (a): the first block has two distinct supports.
        assert!(is_popescu_order(&o, 2, false).unwrap().is_fails());
        let sq = order(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(is_popescu_order(&sq, 1, true).unwrap().is_holds());
        for o in [
            order(4, &[&[2, 1, 0, 0], &[0, 0, 1, 2]]),
            order(4, &[&[0, 0, 1, 2], &[2, 1, 0, 0]]),
        ] {
            assert!(is_popescu_order(&o, 1, true).unwrap().is_fails());
            assert!(is_popescu_order(&o, 1, false).unwrap().is_fails());
        }
        assert!(is_popescu_order(&o, 3, false).is_err());
    }

    #[test]
    fn popescu_accepts_pure_power_colons() {
        // <x1^2> : x2 ... here <x1^2> : x1x2 = <x1>, and <x2^2> : x1^2x2 ... etc.
        let o = order(2, &[&[2, 0], &[1, 2]]);
        // colon <x1^2> : x1x2^2 = <x1>, irreducible; not linear-only check.
        assert!(is_popescu_order(&o, 1, true).unwrap().is_holds());
        let o = order(2, &[&[0, 3], &[2, 1]]);
        // colon = <x2^2>, a pure power: irreducible but not linear.
        assert!(is_popescu_order(&o, 1, true).unwrap().is_holds());
        assert!(is_admissible_order(&o).is_fails());
    }

    #[test]
    fn wedge_order_examples() {
        let o = order(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let w = wedge_order_construction(&o).unwrap();
        assert_eq!(
            w.monomials(),
            vec![m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])]
        );

        let o = order(3, &[&[1, 1, 0]]);
        assert_eq!(
            wedge_order_construction(&o).unwrap().monomials(),
            vec![m(&[1, 1, 1])]
        );

        // x2^3, x1x2 is the only support-degree increasing order and is not admissible.
        let o = order(3, &[&[0, 3, 0], &[1, 1, 0]]);
        assert!(matches!(
            wedge_order_construction(&o),
            Err(Error::Precondition(_))
        ));
        let o = order(3, &[&[1, 1, 0], &[0, 3, 0]]);
        assert!(matches!(
            wedge_order_construction(&o),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn componentwise_examples() {
        let r1 = componentwise_lq(four_generator().ideal(), ComponentMode::Support, 12);
        assert!(r1[&2].is_fails());

        let r2 = componentwise_lq(seven_generator().ideal(), ComponentMode::Support, 12);
        assert_eq!(r2.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        for d in 1..=3 {
            assert!(r2[&d].is_holds(), "component {d}");
        }

        let pack = MonomialIdeal::from_exps(3, &[&[0, 4, 0], &[1, 3, 0], &[0, 3, 1], &[2, 1, 1]]);
        let r = componentwise_lq(&pack, ComponentMode::Support, 12);
        assert!(r.values().all(PropertyReport::is_holds));
        assert!(find_admissible_order(&pack, OrderConstraint::None, 12)
            .unwrap()
            .is_none());
    }

    #[test]
    fn pack_examples() {
        let vars = MonomialIdeal::maximal(3);
        assert!(pack_compatibility(&vars, 12).unwrap().is_holds());
        let pack = MonomialIdeal::from_exps(3, &[&[0, 4, 0], &[1, 3, 0], &[0, 3, 1], &[2, 1, 1]]);
        let r = pack_compatibility(&pack, 12).unwrap();
        assert!(r.is_fails());
        assert!(matches!(
            r.witness,
            Some(Witness::Pack { component: 3, .. })
        ));
        let sq = MonomialIdeal::from_exps(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let r = pack_compatibility(&sq, 12).unwrap();
        let Some(Witness::Order { order }) = r.witness else {
            panic!("expected induced order")
        };
        let o = GeneratorOrder::from_monomials(3, order).unwrap();
        assert!(o.is_support_degree_increasing());
        assert!(is_admissible_order(&o).is_holds());
    }
}
