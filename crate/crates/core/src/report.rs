//! Verdicts and witnesses returned by the property checkers.

use std::time::Instant;

use serde::Serialize;

use crate::complex::Face;
use crate::mono::{ExponentVector, Monomial, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

/// Search effort spent on a check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub elapsed_us: u64,
}

/// One `(i, j) -> (k, d)` entry: `<u_k> : u_j = <x_d>` and `x_d` divides `u_i / gcd(u_i, u_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub var: usize,
}

/// Witnesses for an admissible order, one per pair `i < j` (zero-based positions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityCertificate {
    pub order: Vec<Monomial>,
    pub entries: Vec<CertificateEntry>,
}

impl AdmissibilityCertificate {
    /// Re-evaluates every witness against the recorded order.
    pub fn verify(&self) -> bool {
        let m = self.order.len();
        let mut seen = vec![vec![false; m]; m];
        for e in &self.entries {
            if !(e.i < e.j && e.k < e.j && e.j < m) {
                return false;
            }
            let uj = &self.order[e.j];
            let qk = self.order[e.k].colon(uj);
            if qk.degree() != 1 || qk.exp(e.var) != 1 {
                return false;
            }
            if self.order[e.i].colon(uj).exp(e.var) == 0 {
                return false;
            }
            seen[e.i][e.j] = true;
        }
        (0..m).all(|j| (0..j).all(|i| seen[i][j]))
    }
}

/// Concrete evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A generator order (admissible, induced, or constructed).
    Order {
        order: Vec<Monomial>,
    },
    Certificate(AdmissibilityCertificate),
    /// The colon ideal at `position` has a minimal generator that is not a variable.
    NonLinearColon {
        position: usize,
        generator: Monomial,
        colon: MonomialIdeal,
    },
    /// Exhaustive search found nothing; `states` counts visited search states.
    Exhausted {
        states: u64,
    },
    /// A Popescu condition (`a`, `b` or `c`) fails at the given positions.
    Popescu {
        condition: char,
        positions: Vec<usize>,
    },
    /// A pair `u >_lex v` with first exceeding index `t` has no exchange.
    WeakPolymatroidal {
        u: Monomial,
        v: Monomial,
        t: usize,
    },
    /// `u` violates the stability condition for the index pair.
    Stability {
        generator: Monomial,
        j: usize,
        i: Option<usize>,
    },
    /// No compatible admissible order exists for the support component `d`.
    Pack {
        component: usize,
        prefix: Vec<Monomial>,
    },
    Shedding {
        tree: crate::classes::SheddingTree,
    },
    SequentiallyPure {
        set: Vec<usize>,
        shift: ExponentVector,
        reason: String,
    },
    /// Facets listed in shelling order.
    Shelling {
        facets: Vec<Face>,
    },
    /// Shedding vertices in depth-first order.
    VertexShedding {
        vertices: Vec<usize>,
    },
    /// Facet pair violating the exchange condition.
    FacetPair {
        larger: Face,
        smaller: Face,
        t: usize,
    },
    /// A vertex relabeling `i -> perm[i]`.
    Relabeling {
        perm: Vec<usize>,
    },
    /// A failing component of a componentwise property.
    Component {
        degree: usize,
        detail: Box<PropertyReport>,
    },
    Note {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: Stats,
}

impl PropertyReport {
    pub fn holds(property: impl Into<String>, witness: Option<Witness>) -> Self {
        Self {
            property: property.into(),
            verdict: Verdict::Holds,
            witness,
            stats: Stats::default(),
        }
    }

    pub fn fails(property: impl Into<String>, witness: Witness) -> Self {
        Self {
            property: property.into(),
            verdict: Verdict::Fails,
            witness: Some(witness),
            stats: Stats::default(),
        }
    }

    pub fn unknown(property: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            property: property.into(),
            verdict: Verdict::Unknown,
            witness: Some(Witness::Note {
                message: message.into(),
            }),
            stats: Stats::default(),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    pub(crate) fn with_stats(mut self, nodes: u64, started: Instant) -> Self {
        self.stats = Stats {
            nodes,
            elapsed_us: started.elapsed().as_micros() as u64,
        };
        self
    }
}
