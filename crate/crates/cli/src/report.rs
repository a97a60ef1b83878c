//! JSON classification reports.
//!
//! Objects are `serde_json` maps, which keep their keys sorted, so the output
//! is byte-stable for a fixed input and tool version.

use std::sync::Arc;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use idealis_core::classify::witness_violates;
use idealis_core::{classify, dsl, Caps, FiniteRing, Ideal, IdealLattice, Property, PropertyReport, Result, Witness};

use crate::TOOL_VERSION;

pub struct Classification {
    pub ring: Arc<FiniteRing>,
    pub lattice: IdealLattice,
    pub reports: Vec<PropertyReport>,
}

impl Classification {
    /// One ideal when `ideal_text` is given, otherwise every proper ideal in
    /// lattice order.
    pub fn build(ring: Arc<FiniteRing>, ideal_text: Option<&str>, caps: &Caps) -> Result<Self> {
        let lattice = IdealLattice::enumerate(&ring, caps)?;
        let reports = match ideal_text {
            Some(text) => {
                let p = dsl::parse_ideal(text, &ring)?;
                let i = lattice.index_of_mask(p.mask()).expect("every ideal is in the lattice");
                vec![classify(lattice.get(i))?]
            }
            None => lattice.proper().map(|(_, p)| classify(p)).collect::<Result<_>>()?,
        };
        Ok(Classification { ring, lattice, reports })
    }

    pub fn to_json(&self) -> Value {
        let ring = &self.ring;
        let expr = ring.expr().to_string();
        let ideals: Vec<Value> = self.reports.iter().map(|r| ideal_json(ring, r)).collect();
        let edges: Vec<Value> = self
            .lattice
            .covering_edges()
            .into_iter()
            .map(|(a, b)| json!([self.lattice.get(a).to_literal_text(), self.lattice.get(b).to_literal_text()]))
            .collect();
        json!({
            "ring": expr,
            "ringSize": ring.size(),
            "ideals": ideals,
            "latticeEdges": edges,
            "toolVersion": TOOL_VERSION,
            "corpusHash": corpus_hash(&format!("{expr}\n")),
        })
    }

    /// Rebuilds the ring from its expression, reclassifies every reported
    /// ideal from scratch and re-validates each witness. Returns one line per
    /// mismatch.
    pub fn recheck(&self, caps: &Caps) -> Result<Vec<String>> {
        let fresh = dsl::elaborate(self.ring.expr(), caps)?;
        let mut out = Vec::new();
        for r in &self.reports {
            let p = r.ideal();
            let label = p.to_literal_text();
            for prop in r.recheck() {
                out.push(format!("{label}: {prop} witness {:?} does not violate", r.witness(prop)));
            }
            let elems: Vec<usize> = p.elements().collect();
            let again = classify(&Ideal::from_elements(&fresh, &elems)?)?;
            for prop in Property::ALL {
                if again.verdict(prop) != r.verdict(prop) {
                    out.push(format!("{label}: {prop} differs on recomputation"));
                }
                if let Some(w) = r.witness(prop) {
                    if !witness_violates(prop, again.ideal(), w) {
                        out.push(format!("{label}: {prop} witness {w} fails on the rebuilt ring"));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn ideal_json(ring: &FiniteRing, r: &PropertyReport) -> Value {
    let p = r.ideal();
    let lit = |i: usize| Value::String(ring.literal(i).to_string());
    let mut verdicts = serde_json::Map::new();
    let mut witnesses = serde_json::Map::new();
    for (prop, v) in r.verdicts() {
        verdicts.insert(prop.key().to_string(), Value::Bool(v.holds()));
        if let Some(w) = v.witness() {
            witnesses.insert(prop.key().to_string(), Value::Array(w.elements().into_iter().map(lit).collect()));
        }
    }
    let mut out = json!({
        "ideal": p.to_literal_text(),
        "generators": p.canonical_generators().into_iter().map(lit).collect::<Vec<_>>(),
        "elements": p.elements().map(lit).collect::<Vec<_>>(),
        "code": r.code(),
        "verdicts": verdicts,
        "witnesses": witnesses,
    });
    if r.zero_ideal_two_absorbing_flag() {
        out["footnotes"] = json!(["2absorbing evaluated on the zero ideal"]);
    }
    out
}

/// Lowercase hex SHA-256.
pub fn corpus_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn render(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("values serialize")
}

/// Witness as element literals, e.g. `(2,2,3)`.
pub fn witness_text(ring: &FiniteRing, w: Witness) -> String {
    let parts: Vec<String> = w.elements().into_iter().map(|i| ring.literal(i).to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(ring: &str, ideal: Option<&str>) -> Value {
        let caps = Caps::default();
        let r = dsl::build_ring(ring, &caps).unwrap();
        Classification::build(r, ideal, &caps).unwrap().to_json()
    }

    #[test]
    fn z12_ideal_four() {
        let v = report("Z12", Some("(4)"));
        let i = &v["ideals"][0];
        assert_eq!(i["verdicts"]["w1ap"], true);
        assert_eq!(i["verdicts"]["weaklyPrime"], false);
        assert_eq!(i["witnesses"]["weaklyPrime"], json!(["2", "2"]));
        assert_eq!(i["elements"], json!(["0", "4", "8"]));
        assert_eq!(v["ringSize"], 12);
        assert_eq!(v["latticeEdges"].as_array().unwrap().len(), 7);
        assert!(i.get("footnotes").is_none());
    }

    #[test]
    fn z5_has_two_ideals_listed_once() {
        let v = report("Z5", None);
        let ideals = v["ideals"].as_array().unwrap();
        assert_eq!(ideals.len(), 1);
        assert_eq!(ideals[0]["verdicts"]["prime"], true);
        assert_eq!(ideals[0]["footnotes"].as_array().unwrap().len(), 1);
        assert_eq!(v["latticeEdges"], json!([["(0)", "(1)"]]));
    }

    #[test]
    fn keys_sorted_and_stable() {
        let a = render(&report("Z2 x Z4", None));
        let b = render(&report("Z2 x Z4", None));
        assert_eq!(a, b);
        let top: Vec<&str> = a.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim()).collect();
        let mut sorted = top.clone();
        sorted.sort();
        assert_eq!(top, sorted);
    }

    #[test]
    fn hash_is_sha256() {
        assert_eq!(
            corpus_hash(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn recheck_clean() {
        let caps = Caps::default();
        let r = dsl::build_ring("LocalAlg(2)", &caps).unwrap();
        let c = Classification::build(r, None, &caps).unwrap();
        assert!(c.recheck(&caps).unwrap().is_empty());
    }
}
