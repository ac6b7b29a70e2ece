//! Random instances, the law registry, audits and counterexample mining.
//!
//! Every instance is drawn from a ChaCha stream keyed by `(seed, index)`, so
//! serial and parallel runs produce identical results.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

use crate::betti::{is_componentwise_support_linear, min_support_linear_truncation, suppreg};
use crate::classes::{
    is_i_stable, is_sequentially_pure, is_variable_decomposable, is_weakly_polymatroidal,
    stable_m_closure, stable_prefix_family, strongly_stable_closure, vd_admissible_order,
    wp_profile, wp_shedding_decomposition, SheddingTree, StabilityVariant,
};
use crate::complex::{dual_ideal, is_shellable, is_vertex_decomposable, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::mono::{ExponentVector, IrreducibleIdeal, Monomial, MonomialIdeal};
use crate::quotient::{
    componentwise_lq, componentwise_lq_report, constrained_lq_report, is_admissible_order,
    is_popescu_order, linear_quotients_report, wedge_order_construction, ComponentMode,
    GeneratorOrder, OrderConstraint, DEFAULT_GENERATOR_CAP,
};
use crate::report::{PropertyReport, Verdict, Witness};

const MAX_RETRIES: usize = 1000;
const MAX_VARIABLES: usize = 12;

/// Bounds for random instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub n: usize,
    pub max_exponent: u32,
    pub max_degree: u32,
    pub min_gens: usize,
    pub max_gens: usize,
    pub squarefree: bool,
    pub seed: u64,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        Self {
            n: 4,
            max_exponent: 3,
            max_degree: 3,
            min_gens: 1,
            max_gens: 5,
            squarefree: false,
            seed: 0,
        }
    }
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Precondition(format!("invalid generator spec: {m}")));
        if self.n == 0 || self.n > MAX_VARIABLES {
            return bad(&format!("n must lie in 1..={MAX_VARIABLES}"));
        }
        if self.max_exponent == 0 || self.max_degree == 0 {
            return bad("exponent and degree bounds must be positive");
        }
        if self.min_gens == 0 || self.min_gens > self.max_gens {
            return bad("need 1 <= min_gens <= max_gens");
        }
        Ok(())
    }

    fn exponent_bound(&self) -> u32 {
        if self.squarefree {
            1
        } else {
            self.max_exponent
        }
    }

    /// All nonconstant monomials within the exponent and degree bounds.
    pub fn candidates(&self) -> Vec<Monomial> {
        let e = self.exponent_bound();
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n];
        loop {
            let d: u32 = cur.iter().sum();
            if d >= 1 && d <= self.max_degree {
                out.push(Monomial::new(cur.clone()));
            }
            let mut i = 0;
            while i < self.n && cur[i] == e {
                cur[i] = 0;
                i += 1;
            }
            if i == self.n {
                break;
            }
            cur[i] += 1;
        }
        out.sort();
        out
    }
}

/// The RNG for instance `index`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn draw_ideal(
    spec: &GeneratorSpec,
    pool: &[Monomial],
    rng: &mut ChaCha8Rng,
) -> Result<MonomialIdeal> {
    if pool.is_empty() {
        return Err(Error::Precondition(
            "no monomials satisfy the spec bounds".into(),
        ));
    }
    for _ in 0..MAX_RETRIES {
        let k = rng.gen_range(spec.min_gens..=spec.max_gens);
        let picks = (0..k).map(|_| pool[rng.gen_range(0..pool.len())].clone());
        let ideal = MonomialIdeal::new(spec.n, picks)?;
        if !ideal.is_trivial() && (spec.min_gens..=spec.max_gens).contains(&ideal.len()) {
            return Ok(ideal);
        }
    }
    Err(Error::Precondition(format!(
        "no admissible ideal after {MAX_RETRIES} draws"
    )))
}

/// A random nontrivial minimal ideal with generator count in range, deterministic in `(spec.seed, index)`.
pub fn random_ideal(spec: &GeneratorSpec, index: u64) -> Result<MonomialIdeal> {
    spec.validate()?;
    draw_ideal(
        spec,
        &spec.candidates(),
        &mut instance_rng(spec.seed, index),
    )
}

/// A random complex on `[n]` with between `min_gens` and `max_gens` facets.
pub fn random_complex(spec: &GeneratorSpec, index: u64) -> Result<SimplicialComplex> {
    spec.validate()?;
    let mut rng = instance_rng(spec.seed, index);
    let k = rng.gen_range(spec.min_gens..=spec.max_gens);
    let faces = (0..k).map(|_| Face::from_mask(rng.gen_range(1..(1u64 << spec.n))));
    SimplicialComplex::new(spec.n, faces.collect::<Vec<_>>())
}

/// A random irreducible parameter ideal: each `a_i` is absent or lies in `2..=max_exponent+1`.
pub fn random_parameter(n: usize, max_exponent: u32, rng: &mut impl Rng) -> IrreducibleIdeal {
    let a = (0..n)
        .map(|_| {
            if rng.gen_bool(0.25) {
                0
            } else {
                rng.gen_range(2..=max_exponent.max(1) + 1)
            }
        })
        .collect();
    IrreducibleIdeal::new(ExponentVector::new(a))
}

/// A pair `(J, P)` with `J = std_P(J)` nontrivial. Even indices replace `J`
/// by its strongly stable closure so that stability hypotheses are exercised.
pub fn random_stable_instance(
    spec: &GeneratorSpec,
    index: u64,
) -> Result<(MonomialIdeal, IrreducibleIdeal)> {
    spec.validate()?;
    let pool = spec.candidates();
    let mut rng = instance_rng(spec.seed, index);
    for _ in 0..MAX_RETRIES {
        let p = if spec.squarefree {
            IrreducibleIdeal::squares(spec.n)
        } else {
            random_parameter(spec.n, spec.max_exponent, &mut rng)
        };
        let mut j = draw_ideal(spec, &pool, &mut rng)?.std_form(&p)?;
        if index.is_multiple_of(2) {
            j = strongly_stable_closure(&j, &p)?;
        }
        if !j.is_trivial() {
            return Ok((j, p));
        }
    }
    Err(Error::Precondition(format!(
        "no admissible stable instance after {MAX_RETRIES} draws"
    )))
}

/// A replayable law instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    Ideal {
        ideal: MonomialIdeal,
    },
    Stable {
        ideal: MonomialIdeal,
        parameter: IrreducibleIdeal,
        variant: StabilityVariant,
    },
    Complex {
        complex: SimplicialComplex,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Ideal,
    StableIdeal,
    Complex,
}

/// Result of evaluating one law on one instance.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    /// An engine cap or budget prevented a verdict.
    Skipped {
        reason: String,
    },
    /// The hypothesis does not hold.
    Vacuous,
    Holds,
    Violated {
        hypothesis: Box<PropertyReport>,
        conclusion: Box<PropertyReport>,
    },
}

/// A named implication between library predicates.
pub struct Law {
    pub name: &'static str,
    pub domain: Domain,
    pub statement: &'static str,
    check: fn(&Instance) -> Outcome,
}

impl Law {
    pub fn check(&self, instance: &Instance) -> Outcome {
        (self.check)(instance)
    }
}

/// Order-search cap for law checks; stable closures can exceed the default.
const CAP: usize = 2 * DEFAULT_GENERATOR_CAP;

fn skipped(reason: impl ToString) -> Outcome {
    Outcome::Skipped {
        reason: reason.to_string(),
    }
}

fn note(property: &str, verdict: bool, message: impl Into<String>) -> PropertyReport {
    let w = Witness::Note {
        message: message.into(),
    };
    if verdict {
        PropertyReport::holds(property, Some(w))
    } else {
        PropertyReport::fails(property, w)
    }
}

/// Evaluates `hyp ⇒ concl`, with unknown verdicts on either side counted as skipped.
fn implication(
    hyp: PropertyReport,
    concl: impl FnOnce(&PropertyReport) -> PropertyReport,
) -> Outcome {
    match hyp.verdict {
        Verdict::Unknown => skipped(format!("hypothesis {} undecided", hyp.property)),
        Verdict::Fails => Outcome::Vacuous,
        Verdict::Holds => {
            let c = concl(&hyp);
            match c.verdict {
                Verdict::Holds => Outcome::Holds,
                Verdict::Unknown => skipped(format!("conclusion {} undecided", c.property)),
                Verdict::Fails => Outcome::Violated {
                    hypothesis: Box::new(hyp),
                    conclusion: Box::new(c),
                },
            }
        }
    }
}

fn from_result(property: &str, r: Result<PropertyReport>) -> PropertyReport {
    r.unwrap_or_else(|e| PropertyReport::unknown(property, e.to_string()))
}

fn both(property: &str, a: PropertyReport, b: PropertyReport) -> PropertyReport {
    for r in [&a, &b] {
        if r.is_fails() {
            let mut r = r.clone();
            r.property = format!("{property}: {}", r.property);
            return r;
        }
    }
    for r in [&a, &b] {
        if !r.is_holds() {
            return PropertyReport::unknown(property, format!("{} undecided", r.property));
        }
    }
    PropertyReport::holds(property, None)
}

fn ideal_of(inst: &Instance) -> &MonomialIdeal {
    match inst {
        Instance::Ideal { ideal } | Instance::Stable { ideal, .. } => ideal,
        Instance::Complex { .. } => panic!("law applied to the wrong domain"),
    }
}

fn complex_of(inst: &Instance) -> &SimplicialComplex {
    match inst {
        Instance::Complex { complex } => complex,
        _ => panic!("law applied to the wrong domain"),
    }
}

fn stable_of(inst: &Instance) -> (&MonomialIdeal, &IrreducibleIdeal, StabilityVariant) {
    match inst {
        Instance::Stable {
            ideal,
            parameter,
            variant,
        } => (ideal, parameter, *variant),
        _ => panic!("law applied to the wrong domain"),
    }
}

fn order_from_witness(n: usize, r: &PropertyReport) -> Option<GeneratorOrder> {
    match &r.witness {
        Some(Witness::Order { order }) => GeneratorOrder::from_monomials(n, order.clone()).ok(),
        _ => None,
    }
}

fn tree_from_witness(r: &PropertyReport) -> Option<&SheddingTree> {
    match &r.witness {
        Some(Witness::Shedding { tree }) => Some(tree),
        _ => None,
    }
}

fn sdi_hypothesis(i: &MonomialIdeal) -> PropertyReport {
    constrained_lq_report(i, OrderConstraint::SupportDegreeIncreasing, CAP)
}

fn law_lq_sdi_cpt_supp_linear(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(sdi_hypothesis(i), |_| is_componentwise_support_linear(i))
}

fn law_lq_sdi_truncations(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(sdi_hypothesis(i), |_| {
        componentwise_lq_report(i, ComponentMode::SupportAtLeast, CAP)
    })
}

fn law_lq_sdi_support_components(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(sdi_hypothesis(i), |_| {
        componentwise_lq_report(i, ComponentMode::Support, CAP)
    })
}

fn law_wedge_order(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    const NAME: &str = "wedge-order-admissible";
    implication(sdi_hypothesis(i), |h| {
        let Some(order) = order_from_witness(i.n(), h) else {
            return PropertyReport::unknown(NAME, "hypothesis carried no order");
        };
        match wedge_order_construction(&order) {
            Err(e) => note(NAME, false, e.to_string()),
            Ok(w) if w.ideal() != &i.wedge_maximal() => note(
                NAME,
                false,
                format!("constructed order spans {}", w.ideal()),
            ),
            Ok(w) if w.is_empty() => PropertyReport::holds(NAME, None),
            Ok(w) => {
                let adm = is_admissible_order(&w);
                let sdi = note(
                    NAME,
                    w.is_support_degree_increasing(),
                    "support-degree increasing",
                );
                both(NAME, adm, sdi)
            }
        }
    })
}

fn law_lq_sdi_popescu(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(sdi_hypothesis(i), |h| match order_from_witness(i.n(), h) {
        Some(order) => from_result("popescu-order", is_popescu_order(&order, 1, false)),
        None => PropertyReport::unknown("popescu-order", "hypothesis carried no order"),
    })
}

fn law_lq_suppreg(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    const NAME: &str = "suppreg-equals-max-support-degree";
    implication(linear_quotients_report(i, CAP), |_| match suppreg(i) {
        Err(e) => PropertyReport::unknown(NAME, e.to_string()),
        Ok(r) => {
            let m = i.max_support_degree().unwrap_or(0);
            note(NAME, r == m, format!("suppreg {r}, max support degree {m}"))
        }
    })
}

fn law_wp_lex(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(
        is_weakly_polymatroidal(i),
        |_| match GeneratorOrder::from_monomials(i.n(), i.lex_descending()) {
            Ok(o) => is_admissible_order(&o),
            Err(e) => PropertyReport::unknown("lex-order-admissible", e.to_string()),
        },
    )
}

fn law_wp_wedge(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    let single = i.min_support_degree() == i.max_support_degree();
    let mut hyp = is_weakly_polymatroidal(i);
    if !single && hyp.is_holds() {
        hyp = note(
            "wp-single-support-degree",
            false,
            "generators span several support degrees",
        );
    }
    implication(hyp, |_| {
        let wedge = is_weakly_polymatroidal(&i.wedge_maximal());
        let scpt = match wp_profile(i) {
            Ok(p) => note("support-componentwise-wp", p.scpt_wp, "support components"),
            Err(e) => PropertyReport::unknown("support-componentwise-wp", e.to_string()),
        };
        both("wedge-wp", wedge, scpt)
    })
}

fn law_wp_vd(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(is_weakly_polymatroidal(i), |_| {
        is_variable_decomposable(i, false)
    })
}

fn law_wp_shedding(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    const NAME: &str = "wp-shedding-decomposition";
    implication(
        is_weakly_polymatroidal(i),
        |_| match wp_shedding_decomposition(i) {
            Ok(t) => match t.validate(false) {
                Ok(()) => PropertyReport::holds(NAME, Some(Witness::Shedding { tree: t })),
                Err(e) => note(NAME, false, e.to_string()),
            },
            Err(e) => note(NAME, false, e.to_string()),
        },
    )
}

fn law_vd_lq(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(
        is_variable_decomposable(i, false),
        |h| match tree_from_witness(h) {
            None => PropertyReport::unknown("vd-order-admissible", "hypothesis carried no tree"),
            Some(t) => match vd_admissible_order(t) {
                Ok(o) if o.ideal() == i => is_admissible_order(&o),
                Ok(o) => note(
                    "vd-order-admissible",
                    false,
                    format!("unfolded order spans {}", o.ideal()),
                ),
                Err(e) => note("vd-order-admissible", false, e.to_string()),
            },
        },
    )
}

fn law_svd_vd(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    implication(is_variable_decomposable(i, true), |_| {
        is_variable_decomposable(i, false)
    })
}

fn law_profile(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    const NAME: &str = "wp-profile-implications";
    let p = match wp_profile(i) {
        Ok(p) => p,
        Err(e) => return skipped(e),
    };
    let hyp = (p.cpt_wp && p.init_deg) || (p.scpt_wp && p.init_supp);
    implication(note("cpt-wp-and-init-or-scpwp", hyp, "profile"), |_| {
        note(NAME, p.wp, format!("{p:?}"))
    })
}

fn law_truncation(inst: &Instance) -> Outcome {
    let i = ideal_of(inst);
    const NAME: &str = "suppreg-truncation";
    let (l, r) = match (min_support_linear_truncation(i), suppreg(i)) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return skipped(e),
    };
    implication(PropertyReport::holds("nonzero-ideal", None), |_| {
        note(
            NAME,
            l == Some(r),
            format!("min truncation {l:?}, suppreg {r}"),
        )
    })
}

fn law_weakly_stable_lq(inst: &Instance) -> Outcome {
    let (j, p, _) = stable_of(inst);
    let hyp = from_result("weakly-stable", is_i_stable(j, p, StabilityVariant::Weak));
    implication(hyp, |_| linear_quotients_report(j, CAP))
}

fn law_stable_closure(inst: &Instance) -> Outcome {
    let (j, p, v) = stable_of(inst);
    let hyp = from_result("variant-stable", is_i_stable(j, p, v));
    implication(hyp, |_| from_result("m-closure", stable_m_closure(j, p, v)))
}

fn law_stable_prefixes(inst: &Instance) -> Outcome {
    let (j, p, v) = stable_of(inst);
    const NAME: &str = "stable-prefixes";
    let hyp = from_result("variant-stable", is_i_stable(j, p, v));
    implication(hyp, |_| match stable_prefix_family(j, p, v) {
        Ok(all) => match all.into_iter().find(|r| !r.is_holds()) {
            None => PropertyReport::holds(NAME, None),
            Some(r) => r,
        },
        Err(e) => PropertyReport::unknown(NAME, e.to_string()),
    })
}

fn law_weakly_stable_seqpure_vd(inst: &Instance) -> Outcome {
    let (j, p, _) = stable_of(inst);
    let ws = from_result("weakly-stable", is_i_stable(j, p, StabilityVariant::Weak));
    let hyp = both(
        "weakly-stable-and-sequentially-pure",
        ws,
        is_sequentially_pure(j),
    );
    implication(hyp, |_| is_variable_decomposable(j, false))
}

fn law_shellable_facet_skeleton(inst: &Instance) -> Outcome {
    let d = complex_of(inst);
    implication(is_shellable(d, CAP), |_| match d.facet_skeleton(1) {
        Ok(s) => is_shellable(&s, CAP),
        Err(_) => PropertyReport::holds("facet-skeleton-shellable", None),
    })
}

fn law_shellable_skeletons(inst: &Instance) -> Outcome {
    let d = complex_of(inst);
    const NAME: &str = "skeletons-shellable";
    implication(is_shellable(d, CAP), |_| {
        let dim = d.dim().unwrap_or(-1);
        for s in 0..=dim.max(-1) {
            for r in 0..=s {
                let sk = match d.skeleton(r as usize, s as usize) {
                    Ok(sk) => sk,
                    Err(e) => return PropertyReport::unknown(NAME, e.to_string()),
                };
                let rep = is_shellable(&sk, CAP);
                if !rep.is_holds() {
                    let mut rep = rep;
                    rep.property = format!("{NAME}: ({r},{s})");
                    return rep;
                }
            }
        }
        PropertyReport::holds(NAME, None)
    })
}

fn law_vd_shellable(inst: &Instance) -> Outcome {
    let d = complex_of(inst);
    implication(is_vertex_decomposable(d), |_| is_shellable(d, CAP))
}

fn law_vd_facet_skeleton(inst: &Instance) -> Outcome {
    let d = complex_of(inst);
    implication(is_vertex_decomposable(d), |_| match d.facet_skeleton(1) {
        Ok(s) => is_vertex_decomposable(&s),
        Err(_) => PropertyReport::holds("facet-skeleton-vd", None),
    })
}

fn law_complex_vd_ideal_vd(inst: &Instance) -> Outcome {
    let d = complex_of(inst);
    let dual = dual_ideal(d);
    let cvd = is_vertex_decomposable(d);
    let ivd = is_variable_decomposable(&dual, false);
    if cvd.verdict == Verdict::Unknown || ivd.verdict == Verdict::Unknown {
        return skipped("undecided");
    }
    if cvd.verdict == ivd.verdict {
        Outcome::Holds
    } else {
        Outcome::Violated {
            hypothesis: Box::new(cvd),
            conclusion: Box::new(ivd),
        }
    }
}

static LAWS: &[Law] = &[
    Law {
        name: "lq-sdi⇒cpt-supp-linear",
        domain: Domain::Ideal,
        statement: "linear quotients in a support-degree increasing order imply componentwise support-linearity",
        check: law_lq_sdi_cpt_supp_linear,
    },
    Law {
        name: "lq-sdi⇒truncations-lq",
        domain: Domain::Ideal,
        statement: "linear quotients in a support-degree increasing order imply every I_{>=d} has linear quotients",
        check: law_lq_sdi_truncations,
    },
    Law {
        name: "lq-sdi⇒support-components-lq",
        domain: Domain::Ideal,
        statement: "linear quotients in a support-degree increasing order imply support-componentwise linear quotients",
        check: law_lq_sdi_support_components,
    },
    Law {
        name: "lq-sdi⇒wedge-order",
        domain: Domain::Ideal,
        statement: "the order built on I ∧ m from a support-degree increasing admissible order is admissible and support-degree increasing",
        check: law_wedge_order,
    },
    Law {
        name: "lq-sdi⇒popescu",
        domain: Domain::Ideal,
        statement: "a support-degree increasing admissible order gives Popescu quotients with s = 1",
        check: law_lq_sdi_popescu,
    },
    Law {
        name: "lq⇒suppreg-max",
        domain: Domain::Ideal,
        statement: "an ideal with linear quotients has suppreg equal to its largest generator support degree",
        check: law_lq_suppreg,
    },
    Law {
        name: "suppreg-truncation",
        domain: Domain::Ideal,
        statement: "the least l with I_{>=l} l-support-linear equals suppreg(I)",
        check: law_truncation,
    },
    Law {
        name: "wp⇒lex-lq",
        domain: Domain::Ideal,
        statement: "weakly polymatroidal ideals have linear quotients in lex-descending order",
        check: law_wp_lex,
    },
    Law {
        name: "wp-one-sdeg⇒wedge-wp",
        domain: Domain::Ideal,
        statement: "a weakly polymatroidal ideal in one support degree has I ∧ m weakly polymatroidal and is support-componentwise weakly polymatroidal",
        check: law_wp_wedge,
    },
    Law {
        name: "wp⇒vd",
        domain: Domain::Ideal,
        statement: "weakly polymatroidal ideals are variable decomposable",
        check: law_wp_vd,
    },
    Law {
        name: "wp⇒shedding-decomposition",
        domain: Domain::Ideal,
        statement: "shedding the smallest variable of a weakly polymatroidal ideal yields a valid tree",
        check: law_wp_shedding,
    },
    Law {
        name: "vd⇒lq",
        domain: Domain::Ideal,
        statement: "the order unfolded from a shedding tree is admissible",
        check: law_vd_lq,
    },
    Law {
        name: "svd⇒vd",
        domain: Domain::Ideal,
        statement: "strongly variable decomposable ideals are variable decomposable",
        check: law_svd_vd,
    },
    Law {
        name: "wp-profile",
        domain: Domain::Ideal,
        statement: "componentwise WP with the initial-segment condition, or the support-component hypotheses, imply WP",
        check: law_profile,
    },
    Law {
        name: "weakly-stable⇒lq",
        domain: Domain::StableIdeal,
        statement: "weakly P-stable ideals have linear quotients",
        check: law_weakly_stable_lq,
    },
    Law {
        name: "stable⇒m-closure",
        domain: Domain::StableIdeal,
        statement: "std_P(m J) keeps the stability variant of J",
        check: law_stable_closure,
    },
    Law {
        name: "stable⇒prefixes",
        domain: Domain::StableIdeal,
        statement: "every prefix of a variant-stable ideal in degree-revlex order keeps the variant",
        check: law_stable_prefixes,
    },
    Law {
        name: "weakly-stable∧seqpure⇒vd",
        domain: Domain::StableIdeal,
        statement: "sequentially pure weakly P-stable ideals are variable decomposable",
        check: law_weakly_stable_seqpure_vd,
    },
    Law {
        name: "shellable⇒facet-skeleton-shellable",
        domain: Domain::Complex,
        statement: "facet skeletons of shellable complexes are shellable",
        check: law_shellable_facet_skeleton,
    },
    Law {
        name: "shellable⇒skeletons-shellable",
        domain: Domain::Complex,
        statement: "every (r,s)-skeleton of a shellable complex is shellable",
        check: law_shellable_skeletons,
    },
    Law {
        name: "vd⇒shellable",
        domain: Domain::Complex,
        statement: "vertex decomposable complexes are shellable",
        check: law_vd_shellable,
    },
    Law {
        name: "vd⇒facet-skeleton-vd",
        domain: Domain::Complex,
        statement: "facet skeletons of vertex decomposable complexes are vertex decomposable",
        check: law_vd_facet_skeleton,
    },
    Law {
        name: "complex-vd⇔dual-vd",
        domain: Domain::Complex,
        statement: "a complex is vertex decomposable exactly when its dual ideal is variable decomposable",
        check: law_complex_vd_ideal_vd,
    },
];

pub fn laws() -> &'static [Law] {
    LAWS
}

/// Looks up a law; `=>`, `<=>` and `&` are accepted for `⇒`, `⇔` and `∧`.
pub fn law(name: &str) -> Option<&'static Law> {
    let key = name
        .replace("<=>", "⇔")
        .replace("=>", "⇒")
        .replace('&', "∧");
    LAWS.iter().find(|l| l.name == key)
}

/// The instance a law sees at `index`.
pub fn instance_for(domain: Domain, spec: &GeneratorSpec, index: u64) -> Result<Instance> {
    Ok(match domain {
        Domain::Ideal => Instance::Ideal {
            ideal: random_ideal(spec, index)?,
        },
        Domain::StableIdeal => {
            let (ideal, parameter) = random_stable_instance(spec, index)?;
            let variant = match index / 2 % 3 {
                0 => StabilityVariant::Weak,
                1 => StabilityVariant::Stable,
                _ => StabilityVariant::Strong,
            };
            Instance::Stable {
                ideal,
                parameter,
                variant,
            }
        }
        Domain::Complex => Instance::Complex {
            complex: random_complex(spec, index)?,
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub index: u64,
    pub instance: Instance,
    pub hypothesis: PropertyReport,
    pub conclusion: PropertyReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditResult {
    pub law: String,
    pub spec: GeneratorSpec,
    pub count: u64,
    /// Instances satisfying the hypothesis.
    pub applicable: u64,
    pub skipped: u64,
    pub violations: Vec<Violation>,
}

impl AuditResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates `law` on instances `0..count`.
pub fn audit(name: &str, spec: &GeneratorSpec, count: u64) -> Result<AuditResult> {
    let law = law(name).ok_or_else(|| Error::Precondition(format!("unknown law `{name}`")))?;
    spec.validate()?;
    let outcomes: Vec<(u64, Instance, Outcome)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let inst = instance_for(law.domain, spec, i)?;
            let out = law.check(&inst);
            Ok((i, inst, out))
        })
        .collect::<Result<_>>()?;
    let mut result = AuditResult {
        law: law.name.to_string(),
        spec: spec.clone(),
        count,
        applicable: 0,
        skipped: 0,
        violations: vec![],
    };
    for (index, instance, out) in outcomes {
        match out {
            Outcome::Skipped { .. } => result.skipped += 1,
            Outcome::Vacuous => {}
            Outcome::Holds => result.applicable += 1,
            Outcome::Violated {
                hypothesis,
                conclusion,
            } => {
                result.applicable += 1;
                result.violations.push(Violation {
                    index,
                    instance,
                    hypothesis: *hypothesis,
                    conclusion: *conclusion,
                });
            }
        }
    }
    Ok(result)
}

/// Re-evaluates a recorded violation.
pub fn replay(name: &str, instance: &Instance) -> Result<Outcome> {
    let law = law(name).ok_or_else(|| Error::Precondition(format!("unknown law `{name}`")))?;
    let ok = matches!(
        (law.domain, instance),
        (Domain::Ideal, Instance::Ideal { .. })
            | (Domain::StableIdeal, Instance::Stable { .. })
            | (Domain::Complex, Instance::Complex { .. })
    );
    if !ok {
        return Err(Error::Precondition(format!(
            "instance does not match the domain of `{name}`"
        )));
    }
    Ok(law.check(instance))
}

/// An ideal with componentwise linear quotients but no linear quotients.
#[derive(Clone, Debug, Serialize)]
pub struct MiningHit {
    pub ideal: MonomialIdeal,
    pub components: BTreeMap<usize, PropertyReport>,
    pub linear_quotients: PropertyReport,
}

impl MiningHit {
    /// Recomputes both verdicts from scratch.
    pub fn verify(&self) -> bool {
        let comps = componentwise_lq(&self.ideal, ComponentMode::Degree, CAP);
        comps.values().all(PropertyReport::is_holds)
            && comps
                .values()
                .all(|r| match order_from_witness(self.ideal.n(), r) {
                    Some(o) => is_admissible_order(&o).is_holds(),
                    None => false,
                })
            && linear_quotients_report(&self.ideal, CAP).is_fails()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MiningReport {
    pub spec: GeneratorSpec,
    pub exhaustive: bool,
    pub budget: u64,
    pub tried: u64,
    /// Instances whose components all have linear quotients.
    pub componentwise: u64,
    pub skipped: u64,
    pub hits: Vec<MiningHit>,
}

fn examine(ideal: MonomialIdeal) -> (bool, bool, Option<MiningHit>) {
    let components = componentwise_lq(&ideal, ComponentMode::Degree, CAP);
    if components.values().any(PropertyReport::is_fails) {
        return (false, false, None);
    }
    if components.values().any(|r| !r.is_holds()) {
        return (true, false, None);
    }
    let lq = linear_quotients_report(&ideal, CAP);
    match lq.verdict {
        Verdict::Unknown => (true, true, None),
        Verdict::Holds => (false, true, None),
        Verdict::Fails => (
            false,
            true,
            Some(MiningHit {
                ideal,
                components,
                linear_quotients: lq,
            }),
        ),
    }
}

fn summarize(
    spec: &GeneratorSpec,
    exhaustive: bool,
    budget: u64,
    ideals: Vec<MonomialIdeal>,
) -> MiningReport {
    let results: Vec<_> = ideals.into_par_iter().map(examine).collect();
    let mut report = MiningReport {
        spec: spec.clone(),
        exhaustive,
        budget,
        tried: results.len() as u64,
        componentwise: 0,
        skipped: 0,
        hits: vec![],
    };
    for (skip, cpt, hit) in results {
        report.skipped += u64::from(skip);
        report.componentwise += u64::from(cpt);
        report.hits.extend(hit);
    }
    report
}

/// Random search for an ideal with componentwise linear quotients (degree
/// components) that has no linear quotients.
pub fn mine_open_question(spec: &GeneratorSpec, budget: u64) -> Result<MiningReport> {
    spec.validate()?;
    let ideals = (0..budget)
        .map(|i| random_ideal(spec, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(spec, false, budget, ideals))
}

/// Walks every minimal generating set within the spec bounds, up to `budget` ideals.
pub fn mine_exhaustive(spec: &GeneratorSpec, budget: u64) -> Result<MiningReport> {
    spec.validate()?;
    Ok(summarize(spec, true, budget, antichains(spec, budget)))
}

/// Nontrivial minimal generating sets within the bounds, in a fixed order.
pub fn antichains(spec: &GeneratorSpec, limit: u64) -> Vec<MonomialIdeal> {
    let pool = spec.candidates();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        spec: &GeneratorSpec,
        pool: &[Monomial],
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<MonomialIdeal>,
        limit: u64,
    ) {
        if out.len() as u64 >= limit {
            return;
        }
        if chosen.len() >= spec.min_gens {
            out.push(
                MonomialIdeal::new(spec.n, chosen.iter().map(|&i| pool[i].clone()))
                    .expect("pool monomials have the spec dimension"),
            );
        }
        if chosen.len() == spec.max_gens {
            return;
        }
        for c in start..pool.len() {
            let m = &pool[c];
            if chosen
                .iter()
                .any(|&i| pool[i].divides(m) || m.divides(&pool[i]))
            {
                continue;
            }
            chosen.push(c);
            rec(spec, pool, c + 1, chosen, out, limit);
            chosen.pop();
            if out.len() as u64 >= limit {
                return;
            }
        }
    }
    rec(spec, &pool, 0, &mut chosen, &mut out, limit);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> GeneratorSpec {
        GeneratorSpec {
            seed: 7,
            ..GeneratorSpec::default()
        }
    }

    #[test]
    fn deterministic_draws() {
        let s = spec();
        for i in 0..20 {
            assert_eq!(random_ideal(&s, i).unwrap(), random_ideal(&s, i).unwrap());
        }
        assert_ne!(
            (0..10)
                .map(|i| random_ideal(&s, i).unwrap())
                .collect::<Vec<_>>(),
            (10..20)
                .map(|i| random_ideal(&s, i).unwrap())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn squarefree_draws() {
        let s = GeneratorSpec {
            squarefree: true,
            ..spec()
        };
        for i in 0..50 {
            assert!(random_ideal(&s, i).unwrap().is_squarefree());
        }
    }

    #[test]
    fn generator_counts_in_range() {
        let s = GeneratorSpec {
            min_gens: 2,
            max_gens: 4,
            ..spec()
        };
        for i in 0..1000 {
            let len = random_ideal(&s, i).unwrap().len();
            assert!((2..=4).contains(&len), "{len}");
        }
    }

    #[test]
    fn unsatisfiable_spec_errors() {
        let s = GeneratorSpec {
            n: 1,
            min_gens: 3,
            max_gens: 3,
            ..spec()
        };
        assert!(random_ideal(&s, 0).is_err());
        assert!(GeneratorSpec { n: 0, ..spec() }.validate().is_err());
    }

    #[test]
    fn stable_instances_are_standard() {
        let s = spec();
        for i in 0..40 {
            let (j, p) = random_stable_instance(&s, i).unwrap();
            assert!(j.gens().iter().all(|g| !p.contains(g)));
            if i % 2 == 0 {
                assert!(is_i_stable(&j, &p, StabilityVariant::Strong)
                    .unwrap()
                    .is_holds());
            }
        }
    }

    #[test]
    fn law_lookup_accepts_ascii() {
        assert!(law("wp=>vd").is_some());
        assert!(law("weakly-stable&seqpure=>vd").is_some());
        assert!(law("complex-vd<=>dual-vd").is_some());
        assert!(law("nonsense").is_none());
        assert!(audit("nonsense", &spec(), 1).is_err());
    }

    #[test]
    fn audit_is_deterministic() {
        let s = spec();
        let a = serde_json::to_string(&audit("wp⇒vd", &s, 30).unwrap()).unwrap();
        let b = serde_json::to_string(&audit("wp⇒vd", &s, 30).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn replay_matches_domain() {
        let inst = Instance::Ideal {
            ideal: MonomialIdeal::from_exps(2, &[&[1, 1], &[0, 3]]),
        };
        assert!(matches!(replay("wp⇒vd", &inst).unwrap(), Outcome::Holds));
        assert!(replay("vd⇒shellable", &inst).is_err());
    }

    #[test]
    fn tiny_exhaustive_mining_is_negative() {
        let s = GeneratorSpec {
            n: 2,
            max_exponent: 2,
            max_degree: 2,
            min_gens: 1,
            max_gens: 5,
            ..spec()
        };
        let r = mine_exhaustive(&s, u64::MAX).unwrap();
        assert!(r.tried > 0);
        assert!(r.hits.is_empty());
        assert_eq!(mine_open_question(&s, 0).unwrap().tried, 0);
    }

    #[test]
    fn antichains_are_minimal() {
        let s = GeneratorSpec {
            n: 2,
            max_exponent: 2,
            max_degree: 2,
            ..spec()
        };
        let all = antichains(&s, u64::MAX);
        // Pool x1, x2, x1^2, x1x2, x2^2: five singletons, six pairs, one triple.
        assert_eq!(all.len(), 12);
    }
}
