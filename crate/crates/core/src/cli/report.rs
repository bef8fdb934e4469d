//! The structured record every command produces, rendered as plain text or
//! JSON. Variable and row indices are 1-based here, unlike the library.

use std::fmt::Write as _;

use serde::Serialize;

use crate::crosscheck::CrossCheckSummary;
use crate::matrix::{ExponentMatrix, StructureReport};
use crate::monomial::MonomialMap;
use crate::oracle::Census;
use crate::same_retract::GammaSets;
use crate::structure::{MonicAssociation, RetractStructure, WitnessReport};
use crate::transform::Permutation;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validity: Option<Validity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub association: Option<AssociationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent_matrix: Option<ExponentMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<StructureSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standardization: Option<Standardization>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retract: Option<RetractSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalents: Option<Vec<ExponentMatrix>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Census>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_check: Option<CrossCheckSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejection: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputSection {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    pub vars: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<String>>,
}

impl InputSection {
    pub fn from_map(map: &MonomialMap) -> Self {
        InputSection {
            kind: "map",
            ring: Some(map.domain().to_string()),
            vars: map.n(),
            map: Some(map_lines(map, "X", "X")),
        }
    }

    pub fn from_matrix(m: &ExponentMatrix) -> Self {
        InputSection {
            kind: "matrix",
            ring: None,
            vars: m.n(),
            map: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Validity {
    pub endomorphism: bool,
    pub retraction: bool,
    pub monic: bool,
    pub nondegenerate: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AssociationSection {
    pub lambdas: Vec<String>,
    pub lambda_consistent: bool,
    pub monic_retraction: bool,
    pub all_lambdas_units: bool,
    /// `(i, e)` with `e` the idempotent `lambda_i * psi_i(lambda)`, `i`
    /// 1-based.
    pub idempotent_witnesses: Vec<(usize, String)>,
    pub divisibility_links: Vec<(usize, usize, bool)>,
    pub monic_map: Vec<String>,
}

impl From<&MonicAssociation> for AssociationSection {
    fn from(a: &MonicAssociation) -> Self {
        AssociationSection {
            lambdas: a.lambdas.iter().map(ToString::to_string).collect(),
            lambda_consistent: a.lambda_consistent,
            monic_retraction: a.monic_retraction,
            all_lambdas_units: a.all_lambdas_units,
            idempotent_witnesses: a
                .idempotent_witnesses
                .iter()
                .map(|(i, e)| (i + 1, e.to_string()))
                .collect(),
            divisibility_links: a
                .divisibility_links
                .iter()
                .map(|l| (l.n2_index + 1, l.n1_index + 1, l.holds))
                .collect(),
            monic_map: map_lines(&a.monic_map, "X", "X"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureSection {
    #[serde(flatten)]
    pub clauses: StructureReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Standardization {
    pub matrix: ExponentMatrix,
    pub sigma: Permutation,
}

#[derive(Clone, Debug, Serialize)]
pub struct RetractSection {
    pub p: usize,
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
    pub generators: Vec<String>,
    pub psi: Vec<String>,
}

impl From<&RetractStructure> for RetractSection {
    fn from(s: &RetractStructure) -> Self {
        RetractSection {
            p: s.p,
            n1: one_based(&s.n1),
            n2: one_based(&s.n2),
            generators: s.generators.iter().map(ToString::to_string).collect(),
            psi: s.psi.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSection {
    pub p: usize,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
    pub composite: Vec<String>,
    pub verified: bool,
}

impl From<&WitnessReport> for WitnessSection {
    fn from(w: &WitnessReport) -> Self {
        WitnessSection {
            p: w.p,
            alpha: map_lines(&w.alpha, "Y", "X"),
            beta: map_lines(&w.beta, "X", "Y"),
            composite: map_lines(&w.composite, "Y", "Y"),
            verified: w.verified,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaSection {
    pub nonzero_columns: Vec<usize>,
    pub gamma: Vec<Vec<usize>>,
}

impl From<&GammaSets> for GammaSection {
    fn from(g: &GammaSets) -> Self {
        GammaSection {
            nonzero_columns: one_based(&g.nonzero_columns),
            gamma: g.gamma.iter().map(|s| one_based(s)).collect(),
        }
    }
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

/// `<src>i -> image` lines with images written in the `tgt` variables.
pub fn map_lines(map: &MonomialMap, src: &str, tgt: &str) -> Vec<String> {
    map.images()
        .iter()
        .enumerate()
        .map(|(i, image)| format!("{src}{} -> {}", i + 1, image.format_with(tgt)))
        .collect()
}

fn list<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        return "none".to_string();
    }
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn sets(items: &[Vec<usize>]) -> String {
    items
        .iter()
        .map(|s| format!("{{{}}}", list(s)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn matrix_block(out: &mut String, indent: &str, m: &ExponentMatrix) {
    for row in m.rows() {
        let _ = writeln!(out, "{indent}{}", list(&row));
    }
}

fn lines_block(out: &mut String, indent: &str, lines: &[String]) {
    for line in lines {
        let _ = writeln!(out, "{indent}{line}");
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Report::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        let _ = writeln!(o, "command: {}", self.command);
        if let Some(input) = &self.input {
            match &input.ring {
                Some(ring) => {
                    let _ = writeln!(o, "input: map over {ring}, vars: {}", input.vars);
                }
                None => {
                    let _ = writeln!(o, "input: matrix, n: {}", input.vars);
                }
            }
            if let Some(map) = &input.map {
                lines_block(o, "  ", map);
            }
        }
        if let Some(v) = &self.validity {
            let _ = writeln!(o, "validity:");
            let _ = writeln!(o, "  endomorphism: {}", v.endomorphism);
            let _ = writeln!(o, "  retraction: {}", v.retraction);
            let _ = writeln!(o, "  monic: {}", v.monic);
            let _ = writeln!(o, "  nondegenerate: {}", v.nondegenerate);
        }
        if let Some(a) = &self.association {
            let _ = writeln!(o, "association:");
            let _ = writeln!(o, "  lambdas: {}", list(&a.lambdas));
            let _ = writeln!(o, "  lambda_consistent: {}", a.lambda_consistent);
            let _ = writeln!(o, "  monic_retraction: {}", a.monic_retraction);
            let _ = writeln!(o, "  all_lambdas_units: {}", a.all_lambdas_units);
            for (i, e) in &a.idempotent_witnesses {
                let _ = writeln!(o, "  idempotent_witness: X{i} {e}");
            }
            for (j, i, holds) in &a.divisibility_links {
                let _ = writeln!(o, "  divisibility_link: X{j} in X{i}: {holds}");
            }
            let _ = writeln!(o, "  monic_map:");
            lines_block(o, "    ", &a.monic_map);
        }
        if let Some(m) = &self.exponent_matrix {
            let _ = writeln!(o, "exponent_matrix:");
            matrix_block(o, "  ", m);
        }
        if let Some(s) = &self.structure {
            let c = &s.clauses;
            let _ = writeln!(o, "structure:");
            let _ = writeln!(o, "  diagonal_ok: {}", c.diagonal_ok);
            let _ = writeln!(o, "  zero_column_rule_ok: {}", c.zero_column_rule_ok);
            let _ = writeln!(o, "  zero_row_rule_ok: {}", c.zero_row_rule_ok);
            let _ = writeln!(o, "  trace: {}", c.trace);
            let _ = writeln!(o, "  is_zero_when_traceless: {}", c.is_zero_when_traceless);
            if let Some(rank) = s.rank {
                let _ = writeln!(o, "  rank: {rank}");
            }
        }
        if let Some(s) = &self.standardization {
            let _ = writeln!(o, "standardization:");
            let _ = writeln!(o, "  sigma: {}", s.sigma);
            let _ = writeln!(o, "  matrix:");
            matrix_block(o, "    ", &s.matrix);
        }
        if let Some(r) = &self.retract {
            let _ = writeln!(o, "retract:");
            let _ = writeln!(o, "  p: {}", r.p);
            let _ = writeln!(o, "  n1: {}", list(&r.n1));
            let _ = writeln!(o, "  n2: {}", list(&r.n2));
            let _ = writeln!(o, "  generators: {}", r.generators.join(", "));
            let _ = writeln!(o, "  psi: {}", r.psi.join(", "));
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(o, "witness:");
            let _ = writeln!(o, "  p: {}", w.p);
            let _ = writeln!(o, "  alpha:");
            lines_block(o, "    ", &w.alpha);
            let _ = writeln!(o, "  beta:");
            lines_block(o, "    ", &w.beta);
            let _ = writeln!(o, "  beta . alpha:");
            lines_block(o, "    ", &w.composite);
            let _ = writeln!(o, "  verified: {}", w.verified);
        }
        if let Some(g) = &self.gamma {
            let _ = writeln!(o, "gamma:");
            let _ = writeln!(o, "  nonzero_columns: {}", list(&g.nonzero_columns));
            let _ = writeln!(o, "  sets: {}", sets(&g.gamma));
        }
        if let Some(c) = self.count {
            let _ = writeln!(o, "count: {c}");
        }
        if let Some(eq) = &self.equivalents {
            let _ = writeln!(o, "equivalents: {}", eq.len());
            for (k, m) in eq.iter().enumerate() {
                let _ = writeln!(o, "  [{}]", k + 1);
                matrix_block(o, "    ", m);
            }
        }
        if let Some(c) = &self.census {
            o.push_str(&c.render());
        }
        if let Some(s) = &self.oracle_check {
            let _ = writeln!(
                o,
                "oracle_check: n={} bound={} degree_cap={} census={} nondegenerate={}",
                s.n, s.bound, s.degree_cap, s.census_size, s.nondegenerate
            );
            for c in &s.checks {
                let status = if c.mismatches == 0 { "ok" } else { "MISMATCH" };
                let _ = writeln!(
                    o,
                    "  {status}: {} ({} checked, {} mismatches)",
                    c.name, c.checked, c.mismatches
                );
            }
        }
        for note in &self.notes {
            let _ = writeln!(o, "note: {note}");
        }
        if let Some(r) = &self.rejection {
            let _ = writeln!(o, "rejected: {r}");
        }
        out
    }
}
