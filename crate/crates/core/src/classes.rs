//! Weakly polymatroidal, stable, variable decomposable and sequentially pure ideals.

use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mono::{
    lex_compare, shakin_compare, ExponentVector, IrreducibleIdeal, Monomial, MonomialIdeal,
    SupportMode,
};
use crate::quotient::GeneratorOrder;
use crate::report::{PropertyReport, Witness};

/// Largest component an analysis of components will build.
pub const COMPONENT_CAP: usize = 5000;

/// First pair `u >_lex v` in `G(I)` without an exchange, as `(u, v, t)`.
fn wp_violation(ideal: &MonomialIdeal) -> Option<(Monomial, Monomial, usize)> {
    let gens = ideal.lex_descending();
    for (a, u) in gens.iter().enumerate() {
        for v in &gens[a + 1..] {
            let t = (0..ideal.n())
                .find(|&i| u.exp(i) != v.exp(i))
                .expect("distinct generators");
            let ok = (t + 1..ideal.n()).any(|j| {
                v.exp(j) > 0 && ideal.contains(&v.div_var(j).expect("x_j divides v").mul_var(t))
            });
            if !ok {
                return Some((u.clone(), v.clone(), t));
            }
        }
    }
    None
}

pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal) -> PropertyReport {
    const NAME: &str = "weakly-polymatroidal";
    match wp_violation(ideal) {
        None => PropertyReport::holds(NAME, None),
        Some((u, v, t)) => PropertyReport::fails(NAME, Witness::WeakPolymatroidal { u, v, t }),
    }
}

/// The condition pattern relating weak polymatroidality to its componentwise versions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WpProfile {
    pub wp: bool,
    /// Every nonzero `I_d`, `d` up to the largest generator degree, is weakly polymatroidal.
    pub cpt_wp: bool,
    /// Every nonzero `I<d>` is weakly polymatroidal.
    pub scpt_wp: bool,
    /// `G(m I_{a-1})` is a lex-initial segment of `G(I_a)` for every `a`.
    pub init_deg: bool,
    /// `deg(u) < deg(v)` implies `u >_lex v` on `G(I)`.
    pub init_deg_pairwise: bool,
    /// `G(m ∧ I<a-1>) ⊆ G(I<a>)` for every `a`, and `suppdeg(u) < suppdeg(v)` implies `u >_lex v`.
    pub init_supp: bool,
}

fn check_cap(c: &MonomialIdeal) -> Result<()> {
    if c.len() > COMPONENT_CAP {
        return Err(Error::CapExceeded {
            what: "generators in a component",
            cap: COMPONENT_CAP,
            found: c.len(),
        });
    }
    Ok(())
}

fn degree_components(ideal: &MonomialIdeal) -> Result<Vec<(u32, MonomialIdeal)>> {
    let (Some(lo), Some(hi)) = (ideal.min_degree(), ideal.max_degree()) else {
        return Ok(vec![]);
    };
    (lo..=hi)
        .map(|d| {
            let c = ideal.degree_component(d);
            check_cap(&c)?;
            Ok((d, c))
        })
        .collect()
}

fn support_components(ideal: &MonomialIdeal) -> Result<Vec<(usize, MonomialIdeal)>> {
    let mut out = Vec::new();
    for d in 0..=ideal.n() {
        let c = ideal.support_component(d, SupportMode::Exact);
        check_cap(&c)?;
        if !c.is_zero() {
            out.push((d, c));
        }
    }
    Ok(out)
}

fn lex_before_on_growth(ideal: &MonomialIdeal, key: impl Fn(&Monomial) -> usize) -> bool {
    let g = ideal.gens();
    g.iter().all(|u| {
        g.iter()
            .all(|v| key(u) >= key(v) || lex_compare(u, v) == std::cmp::Ordering::Greater)
    })
}

pub fn wp_profile(ideal: &MonomialIdeal) -> Result<WpProfile> {
    let degs = degree_components(ideal)?;
    let cpt_wp = degs.iter().all(|(_, c)| wp_violation(c).is_none());
    let mut init_deg = true;
    for w in degs.windows(2) {
        let lower = w[0].1.mul_maximal();
        let upper = &w[1].1;
        let rest: Vec<&Monomial> = upper
            .gens()
            .iter()
            .filter(|g| !lower.gens().contains(g))
            .collect();
        let initial = lower.gens().iter().all(|a| {
            upper.gens().contains(a)
                && rest
                    .iter()
                    .all(|b| lex_compare(a, b) == std::cmp::Ordering::Greater)
        });
        init_deg &= initial;
    }
    let supps = support_components(ideal)?;
    let scpt_wp = supps.iter().all(|(_, c)| wp_violation(c).is_none());
    let mut nested = true;
    for d in 1..=ideal.n() {
        let prev = ideal.support_component(d - 1, SupportMode::Exact);
        let cur = ideal.support_component(d, SupportMode::Exact);
        nested &= prev
            .wedge_maximal()
            .gens()
            .iter()
            .all(|g| cur.gens().contains(g));
    }
    Ok(WpProfile {
        wp: wp_violation(ideal).is_none(),
        cpt_wp,
        scpt_wp,
        init_deg,
        init_deg_pairwise: lex_before_on_growth(ideal, |u| u.degree() as usize),
        init_supp: nested && lex_before_on_growth(ideal, Monomial::support_degree),
    })
}

/// Which exchange condition defines stability.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilityVariant {
    /// `P`-stable: every `j < max(u)`.
    Stable,
    /// Weakly `P`-stable: every `j < max(u / x_max(u))`.
    Weak,
    /// Strongly `P`-stable: every `i ∈ supp(u)` and `j < i`.
    Strong,
}

fn in_sum(j: &MonomialIdeal, p: &IrreducibleIdeal, m: &Monomial) -> bool {
    j.contains(m) || p.contains(m)
}

fn exchange(u: &Monomial, j: usize, i: usize) -> Monomial {
    u.div_var(i).expect("i ∈ supp(u)").mul_var(j)
}

fn stability_violation(
    ideal: &MonomialIdeal,
    p: &IrreducibleIdeal,
    variant: StabilityVariant,
) -> Option<(Monomial, usize, Option<usize>)> {
    for u in ideal.gens() {
        let Some(top) = u.max_var() else { continue };
        match variant {
            StabilityVariant::Strong => {
                for i in u.support() {
                    for j in 0..i {
                        if !in_sum(ideal, p, &exchange(u, j, i)) {
                            return Some((u.clone(), j, Some(i)));
                        }
                    }
                }
            }
            StabilityVariant::Stable | StabilityVariant::Weak => {
                let bound = if variant == StabilityVariant::Stable {
                    Some(top)
                } else {
                    u.div_var(top).expect("top ∈ supp(u)").max_var()
                };
                let Some(bound) = bound else { continue };
                for j in 0..bound {
                    let ok = u
                        .support()
                        .into_iter()
                        .any(|i| i > j && in_sum(ideal, p, &exchange(u, j, i)));
                    if !ok {
                        return Some((u.clone(), j, None));
                    }
                }
            }
        }
    }
    None
}

fn stability_name(variant: StabilityVariant) -> &'static str {
    match variant {
        StabilityVariant::Stable => "stable",
        StabilityVariant::Weak => "weakly-stable",
        StabilityVariant::Strong => "strongly-stable",
    }
}

/// Checks the stability condition on every minimal generator of `J`,
/// which must be in standard form with respect to `P`.
pub fn is_i_stable(
    j: &MonomialIdeal,
    p: &IrreducibleIdeal,
    variant: StabilityVariant,
) -> Result<PropertyReport> {
    if p.n() != j.n() {
        return Err(Error::DimensionMismatch {
            expected: j.n(),
            found: p.n(),
        });
    }
    if let Some(g) = j.gens().iter().find(|g| p.contains(g)) {
        return Err(Error::NotStandardForm(g.to_string()));
    }
    let name = stability_name(variant);
    Ok(match stability_violation(j, p, variant) {
        None => PropertyReport::holds(name, None),
        Some((generator, j, i)) => {
            PropertyReport::fails(name, Witness::Stability { generator, j, i })
        }
    })
}

/// Reports the variant on every prefix `<u_1, ..., u_k>` of `G(J)` sorted by the
/// degree-then-reverse-lexicographic term order.
pub fn stable_prefix_family(
    j: &MonomialIdeal,
    p: &IrreducibleIdeal,
    variant: StabilityVariant,
) -> Result<Vec<PropertyReport>> {
    is_i_stable(j, p, variant)?;
    let mut sorted = j.gens().to_vec();
    sorted.sort_by(shakin_compare);
    (1..=sorted.len())
        .map(|k| {
            is_i_stable(
                &MonomialIdeal::new(j.n(), sorted[..k].iter().cloned())?,
                p,
                variant,
            )
        })
        .collect()
}

/// Verifies the variant on `std_P(m J)` for a variant-stable `J`.
pub fn stable_m_closure(
    j: &MonomialIdeal,
    p: &IrreducibleIdeal,
    variant: StabilityVariant,
) -> Result<PropertyReport> {
    if !is_i_stable(j, p, variant)?.is_holds() {
        return Err(Error::Precondition(format!(
            "input is not {}",
            stability_name(variant)
        )));
    }
    let closed = j.mul_maximal().std_form(p)?;
    let mut r = is_i_stable(&closed, p, variant)?;
    r.property = format!("{}-m-closure", stability_name(variant));
    Ok(r)
}

/// The smallest strongly `P`-stable ideal containing `J`, in standard form.
/// Exchanges preserve degree, so the saturation terminates.
pub fn strongly_stable_closure(j: &MonomialIdeal, p: &IrreducibleIdeal) -> Result<MonomialIdeal> {
    let mut cur = j.std_form(p)?;
    while let Some((u, jj, Some(i))) = stability_violation(&cur, p, StabilityVariant::Strong) {
        let w = exchange(&u, jj, i);
        cur = MonomialIdeal::new(cur.n(), cur.gens().iter().cloned().chain([w]))?.std_form(p)?;
    }
    Ok(cur)
}

/// A certificate of variable decomposability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum SheddingTree {
    Zero {
        n: usize,
    },
    Unit {
        n: usize,
    },
    /// `I = Σ x_var^i I_i` with `children[i] = I_i`, none involving `x_var`.
    Shed {
        ideal: MonomialIdeal,
        var: usize,
        r: u32,
        children: Vec<SheddingTree>,
    },
}

impl SheddingTree {
    /// The ideal this tree decomposes.
    pub fn ideal(&self) -> MonomialIdeal {
        match self {
            SheddingTree::Zero { n } => MonomialIdeal::zero(*n),
            SheddingTree::Unit { n } => MonomialIdeal::unit(*n),
            SheddingTree::Shed { ideal, .. } => ideal.clone(),
        }
    }

    /// Checks reconstruction, the absence of the shedding variable in the
    /// children, and the layer containments at every node.
    pub fn validate(&self, strong: bool) -> Result<()> {
        let SheddingTree::Shed {
            ideal,
            var,
            r,
            children,
        } = self
        else {
            return Ok(());
        };
        let n = ideal.n();
        if *var >= n || children.len() != *r as usize + 1 {
            return Err(Error::MalformedTree(format!(
                "bad shedding node on {ideal}"
            )));
        }
        let (rr, layers) = decompose(ideal, *var);
        if rr != *r {
            return Err(Error::MalformedTree(format!(
                "r = {r} but the ideal has {rr}"
            )));
        }
        for (k, (child, layer)) in children.iter().zip(&layers).enumerate() {
            if child.ideal() != *layer {
                return Err(Error::MalformedTree(format!(
                    "layer {k} of {ideal} does not match"
                )));
            }
            child.validate(strong)?;
        }
        if let Some(k) =
            (1..layers.len()).find(|&k| !layer_contained(&layers[k - 1], &layers[k], strong))
        {
            return Err(Error::MalformedTree(format!(
                "layer {} is not contained in the next one",
                k - 1
            )));
        }
        Ok(())
    }
}

/// `r` and the layers `I_0..I_r` for the variable `v`.
pub fn decompose(ideal: &MonomialIdeal, v: usize) -> (u32, Vec<MonomialIdeal>) {
    let r = ideal.gens().iter().map(|g| g.exp(v)).max().unwrap_or(0);
    let layers = (0..=r)
        .map(|i| {
            MonomialIdeal::new(
                ideal.n(),
                ideal
                    .gens()
                    .iter()
                    .filter(|g| g.exp(v) == i)
                    .map(|g| g.with_exp(v, 0)),
            )
            .expect("dimensions agree")
        })
        .collect();
    (r, layers)
}

/// `lower ⊆ upper·m` (or `lower ⊆ upper ∧ m` when `strong`).
fn layer_contained(lower: &MonomialIdeal, upper: &MonomialIdeal, strong: bool) -> bool {
    lower.gens().iter().all(|g| {
        upper.gens().iter().any(|h| {
            h.divides(g)
                && if strong {
                    g.support_degree() > h.support_degree()
                } else {
                    h != g
                }
        })
    })
}

/// Default node budget for the variable-decomposability search.
pub const VD_NODE_BUDGET: u64 = 200_000;

struct VdSearch {
    strong: bool,
    memo: HashMap<MonomialIdeal, Option<usize>>,
    nodes: u64,
    budget: u64,
}

impl VdSearch {
    /// A shedding variable of `ideal` (original indices), memoized on the
    /// form with unused variables removed.
    fn shedding_var(&mut self, ideal: &MonomialIdeal) -> std::result::Result<Option<usize>, ()> {
        if ideal.is_trivial() {
            return Ok(None);
        }
        let (key, used) = ideal.compress();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.map(|v| used[v]));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let mut found = None;
        'vars: for v in 0..key.n() {
            let (_, layers) = decompose(&key, v);
            if (1..layers.len()).any(|k| !layer_contained(&layers[k - 1], &layers[k], self.strong))
            {
                continue;
            }
            for layer in &layers {
                if !self.accepts(layer)? {
                    continue 'vars;
                }
            }
            found = Some(v);
            break;
        }
        self.memo.insert(key, found);
        Ok(found.map(|v| used[v]))
    }

    fn accepts(&mut self, ideal: &MonomialIdeal) -> std::result::Result<bool, ()> {
        Ok(ideal.is_trivial() || self.shedding_var(ideal)?.is_some())
    }

    fn tree(&mut self, ideal: &MonomialIdeal) -> std::result::Result<SheddingTree, ()> {
        if ideal.is_zero() {
            return Ok(SheddingTree::Zero { n: ideal.n() });
        }
        if ideal.is_unit() {
            return Ok(SheddingTree::Unit { n: ideal.n() });
        }
        let var = self
            .shedding_var(ideal)?
            .expect("accepted ideal has a shedding variable");
        let (r, layers) = decompose(ideal, var);
        let children = layers
            .iter()
            .map(|l| self.tree(l))
            .collect::<std::result::Result<_, _>>()?;
        Ok(SheddingTree::Shed {
            ideal: ideal.clone(),
            var,
            r,
            children,
        })
    }
}

/// Variable decomposability (strong: layers contained in `I_i ∧ m`), trying
/// shedding variables in ascending order. Returns the full tree on success.
pub fn is_variable_decomposable(ideal: &MonomialIdeal, strong: bool) -> PropertyReport {
    is_variable_decomposable_with_budget(ideal, strong, VD_NODE_BUDGET)
}

pub fn is_variable_decomposable_with_budget(
    ideal: &MonomialIdeal,
    strong: bool,
    budget: u64,
) -> PropertyReport {
    let name = if strong {
        "strongly-variable-decomposable"
    } else {
        "variable-decomposable"
    };
    let started = Instant::now();
    let mut search = VdSearch {
        strong,
        memo: HashMap::new(),
        nodes: 0,
        budget,
    };
    let outcome = search.accepts(ideal).and_then(|ok| {
        if ok {
            search.tree(ideal).map(Some)
        } else {
            Ok(None)
        }
    });
    match outcome {
        Ok(Some(tree)) => PropertyReport::holds(name, Some(Witness::Shedding { tree }))
            .with_stats(search.nodes, started),
        Ok(None) => PropertyReport::fails(
            name,
            Witness::Exhausted {
                states: search.nodes,
            },
        )
        .with_stats(search.nodes, started),
        Err(()) => PropertyReport::unknown(name, format!("node budget {budget} exhausted")),
    }
}

/// Unfolds a shedding tree into `x_v^r·σ(I_r), ..., x_v^0·σ(I_0)`.
pub fn vd_admissible_order(tree: &SheddingTree) -> Result<GeneratorOrder> {
    tree.validate(false)?;
    let ideal = tree.ideal();
    GeneratorOrder::from_monomials(ideal.n(), unfold(tree))
}

fn unfold(tree: &SheddingTree) -> Vec<Monomial> {
    match tree {
        SheddingTree::Zero { .. } => vec![],
        SheddingTree::Unit { n } => vec![Monomial::one(*n)],
        SheddingTree::Shed { var, children, .. } => children
            .iter()
            .enumerate()
            .rev()
            .flat_map(|(i, c)| {
                unfold(c)
                    .into_iter()
                    .map(move |u| u.with_exp(*var, i as u32))
            })
            .collect(),
    }
}

/// Builds the decomposition that always sheds the smallest variable present,
/// checking at every node that the layers are weakly polymatroidal and
/// satisfy `I_k ⊆ m I_{k+1}`.
pub fn wp_shedding_decomposition(ideal: &MonomialIdeal) -> Result<SheddingTree> {
    if let Some((u, v, _)) = wp_violation(ideal) {
        return Err(Error::Precondition(format!(
            "not weakly polymatroidal: the pair {u}, {v} has no exchange"
        )));
    }
    wp_tree(ideal)
}

fn wp_tree(ideal: &MonomialIdeal) -> Result<SheddingTree> {
    if ideal.is_zero() {
        return Ok(SheddingTree::Zero { n: ideal.n() });
    }
    if ideal.is_unit() {
        return Ok(SheddingTree::Unit { n: ideal.n() });
    }
    let var = (0..ideal.n())
        .find(|&i| ideal.gens().iter().any(|g| g.exp(i) > 0))
        .expect("nontrivial ideal uses a variable");
    let (r, layers) = decompose(ideal, var);
    if let Some(l) = layers.iter().find(|l| wp_violation(l).is_some()) {
        return Err(Error::MalformedTree(format!(
            "layer {l} of {ideal} is not weakly polymatroidal"
        )));
    }
    if let Some(k) =
        (1..layers.len()).find(|&k| !layer_contained(&layers[k - 1], &layers[k], false))
    {
        return Err(Error::MalformedTree(format!(
            "layer {} of {ideal} is not contained in m times the next layer",
            k - 1
        )));
    }
    let children = layers.iter().map(wp_tree).collect::<Result<_>>()?;
    Ok(SheddingTree::Shed {
        ideal: ideal.clone(),
        var,
        r,
        children,
    })
}

/// Sequential purity.
///
/// `J_{F,a}` is nonzero only when `a` agrees on `[t]` with a generator, so it
/// suffices to range over generator prefixes. "Linear" is read as "generated
/// by variables".
pub fn is_sequentially_pure(j: &MonomialIdeal) -> PropertyReport {
    const NAME: &str = "sequentially-pure";
    let n = j.n();
    let gens = j.gens();
    for t in 0..n {
        let mut prefixes: Vec<&[u32]> = gens.iter().map(|g| &g.exps()[..=t]).collect();
        prefixes.sort();
        prefixes.dedup();
        for a in prefixes {
            let layer: Vec<&Monomial> = gens.iter().filter(|g| &g.exps()[..=t] == a).collect();
            let excess = |g: &Monomial| g.degree() - a.iter().sum::<u32>();
            if !layer.iter().any(|g| excess(g) == 1) {
                continue;
            }
            let mut shift = vec![0; n];
            shift[..=t].copy_from_slice(a);
            let set: Vec<usize> = (0..=t)
                .filter(|&i| i == t || a[i] > 0)
                .map(|i| i + 1)
                .collect();
            let fail = |reason: &str| {
                PropertyReport::fails(
                    NAME,
                    Witness::SequentiallyPure {
                        set: set.clone(),
                        shift: ExponentVector::new(shift.clone()),
                        reason: reason.into(),
                    },
                )
            };
            if layer.iter().any(|g| excess(g) != 1) {
                return fail("J_{F,a} is not generated by variables");
            }
            let next_unit = gens.iter().any(|g| {
                g.exps()[..t] == a[..t]
                    && g.exp(t) == a[t] + 1
                    && g.exps()[t + 1..].iter().all(|&e| e == 0)
            });
            let higher_empty = !gens
                .iter()
                .any(|g| g.exps()[..t] == a[..t] && g.exp(t) > a[t]);
            if !next_unit && !higher_empty {
                return fail("J_{F,a+e_t} is not <1> and some J_{F,a+k e_t} is nonzero");
            }
        }
    }
    PropertyReport::holds(NAME, None)
}
