//! Text and JSON renderings. All polynomial strings use the input grammar,
//! so JSON output can be fed back in.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use fqdecomp::groebner::GroebnerBasis;
use fqdecomp::primdec::{Decomposition, VerificationReport};
use fqdecomp::univar::Factorization;

use crate::ProblemFile;

#[derive(Serialize)]
struct Header<'a> {
    p: u64,
    vars: &'a [String],
    order: &'static str,
}

fn header(pf: &ProblemFile) -> Header<'_> {
    Header { p: pf.ring.modulus(), vars: pf.ring.vars(), order: pf.ring.order().kind().name() }
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn groebner(pf: &ProblemFile, gb: &GroebnerBasis, json: bool) -> String {
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            header: Header<'a>,
            groebner: Vec<String>,
        }
        return to_json(&Out { header: header(pf), groebner: strings(gb.polys()) });
    }
    format!("{gb}\n")
}

pub fn factorization(pf: &ProblemFile, fz: &Factorization, json: bool) -> String {
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            header: Header<'a>,
            t: usize,
            leading_coefficient: u64,
            factors: Vec<String>,
        }
        return to_json(&Out {
            header: header(pf),
            t: fz.factors.len(),
            leading_coefficient: fz.leading_coefficient.value(),
            factors: strings(&fz.factors),
        });
    }
    let mut s = format!("f = {fz}\nprimary factors: {}\n", fz.factors.len());
    for g in &fz.factors {
        let _ = writeln!(s, "  {g}");
    }
    s
}

#[derive(Serialize)]
struct ComponentOut {
    groebner: Vec<String>,
    quotient_dim: Option<usize>,
}

pub fn decomposition(pf: &ProblemFile, d: &Decomposition, report: Option<&VerificationReport>, json: bool) -> String {
    let idempotents = strings(&d.idempotent_polys());
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            header: Header<'a>,
            t: usize,
            idempotents: Vec<String>,
            components: Vec<ComponentOut>,
            #[serde(skip_serializing_if = "Option::is_none")]
            verify: Option<BTreeMap<&'static str, bool>>,
        }
        let components = d
            .components
            .iter()
            .map(|c| ComponentOut { groebner: strings(c.groebner().polys()), quotient_dim: c.quotient_dim() })
            .collect();
        return to_json(&Out {
            header: header(pf),
            t: d.t(),
            idempotents,
            components,
            verify: report.map(|r| r.checks().into_iter().collect()),
        });
    }

    let mut s = format!("t = {}\nidempotents:\n", d.t());
    for h in &idempotents {
        let _ = writeln!(s, "  {h}");
    }
    s.push_str("components:\n");
    for c in &d.components {
        let dim = c.quotient_dim().map_or("?".to_string(), |n| n.to_string());
        let _ = writeln!(s, "  {}  (dim {dim})", c.groebner());
    }
    if let Some(r) = report {
        s.push_str("checks:\n");
        for (name, ok) in r.checks() {
            let _ = writeln!(s, "  {name}: {}", if ok { "pass" } else { "FAIL" });
        }
        if let Some(w) = &r.intersection_witness {
            let _ = writeln!(s, "  intersection witness: {w}");
        }
    }
    s
}
