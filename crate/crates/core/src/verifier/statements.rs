use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatementKind {
    /// Holds for every non-abelian algebra in scope.
    Universal,
    /// Hypothesis implies conclusion; hypothesis-false instances are vacuous.
    Implication,
    /// Both directions are checked on every instance.
    Biconditional,
    /// An implication over pairs of algebras with isomorphic graphs.
    Pairwise,
    /// A single concrete instance.
    Example,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Statement {
    pub id: &'static str,
    pub claim: &'static str,
    pub kind: StatementKind,
}

use StatementKind::*;

const fn st(id: &'static str, kind: StatementKind, claim: &'static str) -> Statement {
    Statement { id, claim, kind }
}

/// All checkable statements, in report order.
pub const STATEMENTS: &[Statement] = &[
    st("Lem2.2", Universal, "deg(x) = |L| - |C_L(x)| for every vertex x"),
    st("Lem2.3", Universal, "no vertex has degree 0"),
    st("Prop2.4", Universal, "G_L is connected"),
    st("Prop2.5", Universal, "girth(G_L) = 3"),
    st("Prop2.6", Universal, "diam(G_L) <= 2"),
    st("Thm2.8", Implication, "G_L complete => |Z(L)| = 1 and q = 2"),
    st("Cor2.9", Implication, "|Z(L)| != 1 or q != 2 => diam(G_L) = 2"),
    st("Lem2.10", Universal, "deg(x) >= 2 for every vertex x"),
    st("Cor2.11", Universal, "G_L is neither a tree nor a star"),
    st("Prop2.12", Universal, "G_L is Hamiltonian"),
    st("Prop2.13", Universal, "G_L is Eulerian"),
    st("Prop2.14", Implication, "dim L^2 = 1 => G_L is (q^n - q^(n-1))-regular"),
    st("Prop2.15", Universal, "G_L is not complete bipartite"),
    st("Prop2.16", Implication, "gamma(G_L) = 1 => |Z(L)| = 1 and q = 2"),
    st("Thm2.18", Biconditional, "gamma(G_L) = 1 <=> some vertex x has |C_L(x)| = 2"),
    st("Lem3.1", Implication, "q = 2, n = 3, dim L^2 = 1 => Z(L) != 0"),
    st("Prop3.2", Implication, "q = 2, n = 3, Z(L) = 0, dim L^2 = 2 => G_L ~ F1"),
    st("Prop3.3", Implication, "q = 2, n = 3, Z(L) = 0, dim L^2 = 3 => G_L ~ F2"),
    st("Prop3.4", Implication, "q = 2, n = 3, dim Z(L) = 1 => dim L^2 = 1 and G_L ~ F3"),
    st("Thm3.5", Implication, "q = 2, n = 3 => G_L ~ F1, F2 or F3"),
    st("Thm3.7", Biconditional, "G_L planar <=> G_L ~ F4 or F5"),
    st("Thm3.8", Biconditional, "G_L outerplanar <=> G_L ~ F4"),
    st("Thm4.1", Pairwise, "G_L1 ~ G_L2 with a vertex of prime power degree => q1 = q2"),
    st("Thm4.2", Pairwise, "G_L1 ~ G_L2 with a vertex of prime degree => |L1| = |L2|"),
    st("Thm4.3", Pairwise, "G_L1 ~ G_L2 with a vertex of degree pq, p > q primes => L1 ~ L2"),
    st("Thm4.4", Pairwise, "G_L1 ~ G_L2 with a vertex of degree p^2 q, p > q primes => L1 ~ L2"),
    st("Cor4.5", Pairwise, "G_L1 ~ G_L2 with a vertex of degree p^n q, p > q primes, n >= 1 => |L1| = |L2|"),
    st("Prop4.6", Pairwise, "G_L1 ~ G_L2 over F_2 => |L1| = |L2|"),
    st("Ex4.7", Example, "<x,y,z | [x,y]=z> and <x,y,z | [x,y]=x> over F_2 have isomorphic graphs, only the first is nilpotent"),
];

pub fn statement(id: &str) -> Result<&'static Statement> {
    STATEMENTS
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownStatement { id: id.into() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub algebra: String,
    pub detail: String,
}

/// Outcome of checking one statement over a scope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub statement_id: String,
    pub quote: String,
    pub kind: StatementKind,
    pub scope: String,
    pub instances_checked: usize,
    /// Instances whose hypothesis was false.
    pub vacuous_count: usize,
    pub failures: Vec<Failure>,
    /// Observations that are recorded but not asserted.
    pub notes: Vec<String>,
    pub status: Status,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates instances for one statement.
#[derive(Debug)]
pub(crate) struct Tally {
    statement: &'static Statement,
    scope: String,
    instances: usize,
    vacuous: usize,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl Tally {
    pub(crate) fn new(statement: &'static Statement, scope: impl Into<String>) -> Self {
        Tally {
            statement,
            scope: scope.into(),
            instances: 0,
            vacuous: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn check(&mut self, algebra: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.fail(algebra, detail());
        }
    }

    pub(crate) fn implication(
        &mut self,
        algebra: &str,
        hypothesis: bool,
        conclusion: impl FnOnce() -> Result<bool>,
        detail: impl FnOnce() -> String,
    ) -> Result<()> {
        self.instances += 1;
        if !hypothesis {
            self.vacuous += 1;
        } else if !conclusion()? {
            self.fail(algebra, detail());
        }
        Ok(())
    }

    pub(crate) fn fail(&mut self, algebra: &str, detail: String) {
        self.failures.push(Failure {
            algebra: algebra.into(),
            detail,
        });
    }

    pub(crate) fn note(&mut self, note: String) {
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    pub(crate) fn finish(self) -> TheoremReport {
        let status = if self.failures.is_empty() && self.instances > 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        TheoremReport {
            statement_id: self.statement.id.into(),
            quote: self.statement.claim.into(),
            kind: self.statement.kind,
            scope: self.scope,
            instances_checked: self.instances,
            vacuous_count: self.vacuous,
            failures: self.failures,
            notes: self.notes,
            status,
        }
    }
}
