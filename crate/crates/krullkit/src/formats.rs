//! JSON input files and JSON renderings of results.

use std::collections::BTreeMap;

use krullkit_core::cardinal::{
    AxiomMode, CardValue, CatalogEntry, ContinuumTable, DedBounds, Dim, Predicates, Verdict,
};
use krullkit_core::chains::{DedReport, DenseCollection, Separated, SeparationCheck, SubsetChain};
use krullkit_core::order::{FiniteLinOrder, FinitePoset};
use krullkit_core::spectra::{ATPoset, LpaGraph, Multiplicity, PathCount};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::notation::{parse_cardinal, ParseError};

/// `{"ground": [...], "links": [[...], ...]}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub ground: Vec<String>,
    pub links: Vec<Vec<String>>,
}

/// `{"elements": [...], "less": [[a, b], ...]}`; the order is generated by
/// the listed pairs.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub less: Vec<(String, String)>,
}

/// `{"order": [...], "dense": [...]}`: a finite linear order listed
/// ascending and a subset of it.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DenseOrderFile {
    pub order: Vec<String>,
    pub dense: Vec<String>,
}

/// `{"entries": {"aleph(0)": "aleph(2)"}, "successor_from": "aleph(1)"}`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    #[serde(default)]
    pub entries: BTreeMap<String, String>,
    #[serde(default)]
    pub successor_from: Option<String>,
}

impl TableFile {
    pub fn into_mode(self) -> Result<AxiomMode, ParseError> {
        let index = |s: &str| -> Result<_, ParseError> {
            match parse_cardinal(s)? {
                krullkit_core::cardinal::Cardinal::Aleph(a) => Ok(a),
                _ => Err(ParseError { what: "aleph", input: s.to_string() }),
            }
        };
        let mut table = ContinuumTable::empty();
        for (k, v) in &self.entries {
            table.entries.insert(index(k)?, index(v)?);
        }
        table.successor_from = self.successor_from.as_deref().map(index).transpose()?;
        Ok(AxiomMode::Table(table))
    }
}

pub fn chain_json(c: &SubsetChain) -> Value {
    json!({
        "ground": c.ground(),
        "links": c.links().iter().map(|l| l.iter().map(|&i| &c.ground()[i]).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn corder_json(c: &SubsetChain) -> Value {
    let co = krullkit_core::chains::c_order(c);
    let g = c.ground();
    json!({
        "pairs": co.pairs().iter().map(|&(x, y)| [&g[x], &g[y]]).collect::<Vec<_>>(),
        "irreflexive": co.is_irreflexive(),
        "transitive": co.is_transitive(),
    })
}

pub fn separated_json(c: &SubsetChain, s: &Separated, check: &SeparationCheck) -> Value {
    let g = c.ground();
    json!({
        "members": s.members.iter().map(|&i| &g[i]).collect::<Vec<_>>(),
        "restricted_links": s.restricted.iter().map(|l| l.iter().map(|&i| &g[i]).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "check": {
            "separated": check.separated,
            "maximal": check.maximal,
            "injective": check.injective,
            "total": check.total,
        },
    })
}

pub fn dense_json(col: &DenseCollection, round_trip: usize) -> Value {
    let p = &col.prep;
    json!({
        "order": p.order.iter().map(|&i| p.name(i)).collect::<Vec<_>>(),
        "cuts": col.cuts.iter().zip(&col.dense).map(|(c, d)| json!({"cut": p.format_cut(c), "dense": d})).collect::<Vec<_>>(),
        "witnesses": col.witnesses.iter().enumerate().map(|(i, w)| json!({
            "lower": p.format_cut(&col.cuts[i]),
            "upper": p.format_cut(&col.cuts[i + 1]),
            "between": p.format_cut(w),
        })).collect::<Vec<_>>(),
        "round_trip_links": round_trip,
    })
}

pub fn ded_json(r: &DedReport) -> Value {
    let sets: Vec<Vec<usize>> = r.witness.iter().map(|&m| (0..r.n).filter(|&i| m >> i & 1 == 1).collect()).collect();
    json!({
        "n": r.n,
        "mode": match r.mode {
            krullkit_core::chains::DedMode::Exhaustive => "exhaustive",
            krullkit_core::chains::DedMode::WitnessOnly => "witness",
        },
        "links": r.links,
        "containments": r.containments,
        "witness": sets,
    })
}

pub fn poset_from_file(f: PosetFile) -> Result<FinitePoset<String>, String> {
    FinitePoset::from_generating_pairs(f.elements, &f.less).map_err(|e| e.to_string())
}

pub fn lin_order_from_file(f: &DenseOrderFile) -> Result<FiniteLinOrder<String>, String> {
    FiniteLinOrder::new(f.order.clone()).map_err(|e| e.to_string())
}

pub fn graph_json(g: &LpaGraph, paths: PathCount) -> Value {
    let l = g.labels();
    json!({
        "vertices": l.iter().map(|x| format!("v_{x}")).collect::<Vec<_>>(),
        "arcs": g.arcs().iter().map(|(&(s, r), m)| json!({
            "source": format!("v_{}", l[s]),
            "range": format!("v_{}", l[r]),
            "multiplicity": match m {
                Multiplicity::Finite(k) => json!(k),
                Multiplicity::CountablyInfinite => json!("omega"),
            },
        })).collect::<Vec<_>>(),
        "regular": krullkit_core::spectra::regular_vertices(g).iter().map(|&v| format!("v_{}", l[v])).collect::<Vec<_>>(),
        "acyclic": g.is_acyclic(),
        "paths": paths.to_string(),
    })
}

pub fn at_json(at: &ATPoset, cardinality: Option<&str>, note: Option<&str>) -> Value {
    let mut v = json!({
        "orig": at.orig,
        "cuts": at.cuts.iter().map(|k| json!({"key": k})).collect::<Vec<_>>(),
        "relation": at.relation().iter().map(|&(a, b)| [at.label(a), at.label(b)]).collect::<Vec<_>>(),
        "fragment": at.fragment.as_str(),
        "linear": at.is_total(),
    });
    if let Some(s) = at.scanned {
        v["scanned_subsets"] = json!(s);
    }
    if let Some(c) = cardinality {
        v["cardinality"] = json!({"symbolic": c});
    }
    if let Some(n) = note {
        v["incomplete"] = json!(n);
    }
    v
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "verdict": v.answer.as_str(),
        "rule": v.rule,
        "anchor": v.anchor,
        "witness": v.witness,
        "notes": v.notes,
    })
}

pub fn value_json(v: &CardValue) -> Value {
    match v {
        CardValue::Exact(c) => json!(c.to_string()),
        CardValue::Pow2 { base, lo, hi } => json!({
            "term": format!("2^{base}"),
            "lo": lo.to_string(),
            "hi": hi.as_ref().map(|h| h.to_string()),
        }),
    }
}

pub fn ded_bounds_json(k: &str, d: &DedBounds) -> Value {
    json!({
        "kappa": k,
        "lo": d.lo.to_string(),
        "hi": value_json(&d.hi),
        "exact": d.exact.as_ref().map(value_json),
        "notes": d.notes,
    })
}

pub fn predicates_json(k: &str, p: &Predicates) -> Value {
    json!({
        "kappa": k,
        "regular": p.regular,
        "singular": p.singular,
        "successor": p.successor_card,
        "limit": p.limit_card,
        "psl": p.psl.as_str(),
        "strong_limit": p.strong_limit.as_str(),
    })
}

fn dim_json(d: &Dim) -> Value {
    match d {
        Dim::Value(t, v) => json!({"term": t.to_string(), "value": value_json(v)}),
        Dim::None => json!("none"),
        Dim::Interval(lo, hi) => json!({"interval": [value_json(lo), value_json(hi)]}),
        Dim::Unknown => json!("unknown"),
    }
}

pub fn catalog_json(desc: &str, mode: &AxiomMode, e: &CatalogEntry) -> Value {
    json!({
        "descriptor": desc,
        "axioms": mode.name(),
        "cardinality": dim_json(&e.cardinality),
        "cdim": dim_json(&e.cdim),
        "scdim": dim_json(&e.scdim),
        "justifications": e.justifications.iter().map(|(f, a)| json!({"field": f, "anchor": a})).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_file_round_trip() {
        let f: TableFile =
            serde_json::from_str(r#"{"entries": {"aleph(0)": "aleph(2)"}, "successor_from": "aleph(1)"}"#).unwrap();
        let mode = f.into_mode().unwrap();
        assert!(mode.validate().is_ok());
        let v = krullkit_core::cardinal::card_exp2(&krullkit_core::cardinal::Cardinal::aleph0(), &mode).unwrap();
        assert_eq!(v.exact(), Some(&krullkit_core::cardinal::Cardinal::aleph(2)));
    }

    #[test]
    fn table_entries_must_be_alephs() {
        let f: TableFile = serde_json::from_str(r#"{"entries": {"3": "aleph(2)"}}"#).unwrap();
        assert!(f.into_mode().is_err());
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<ChainFile>(r#"{"ground": [], "links": [], "extra": 1}"#).is_err());
        assert!(serde_json::from_str::<PosetFile>(r#"{"elements": ["a"], "less": [["a"]]}"#).is_err());
    }

    #[test]
    fn poset_file_takes_transitive_closure() {
        let f: PosetFile =
            serde_json::from_str(r#"{"elements": ["a", "b", "c"], "less": [["a", "b"], ["b", "c"]]}"#).unwrap();
        let p = poset_from_file(f).unwrap();
        assert!(p.leq(&"a".to_string(), &"c".to_string()).unwrap());
    }
}
