//! Hasse diagrams of ideal lattices in Graphviz DOT.

use std::fmt::Write;

use idealis_core::{classify, IdealLattice, Result};

/// Node per ideal in lattice order, labeled with its generators and the
/// six-letter verdict code (`P wP 1A w1A 2A w2A`). In a quasi-local ring the
/// maximal ideal also carries its nilpotency annotation.
pub fn lattice_dot(lattice: &IdealLattice) -> Result<String> {
    let ring = lattice.ring();
    let local_max = lattice.is_quasi_local().then(|| lattice.maximal_indices()[0]);
    let mut out = String::new();
    writeln!(out, "digraph lattice {{").unwrap();
    writeln!(out, "  label={};", quote(&format!("L({})", ring.expr()))).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (i, p) in lattice.ideals().iter().enumerate() {
        let mut label = p.display_label();
        if p.is_proper() {
            label.push('\n');
            label.push_str(&classify(p)?.code());
        }
        if local_max == Some(i) {
            label.push('\n');
            label.push_str(nilpotency(p));
        }
        writeln!(out, "  n{i} [label={}];", quote(&label)).unwrap();
    }
    for (a, b) in lattice.covering_edges() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

fn nilpotency(m: &idealis_core::Ideal) -> &'static str {
    if m.power(2).is_zero() {
        "m^2=0, m^3=0"
    } else if m.power(3).is_zero() {
        "m^3=0"
    } else {
        "m^3!=0"
    }
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        match c {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            '\n' => q.push_str("\\n"),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}

/// Plain-text rendering: one line per ideal, then one per covering edge.
pub fn lattice_text(lattice: &IdealLattice) -> Result<String> {
    let mut out = String::new();
    for (i, p) in lattice.ideals().iter().enumerate() {
        let code = if p.is_proper() { classify(p)?.code() } else { "------".into() };
        writeln!(out, "{i:>4}  {code}  {}", p.display_label()).unwrap();
    }
    for (a, b) in lattice.covering_edges() {
        writeln!(out, "{a:>4} -> {b}").unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use idealis_core::{dsl, Caps};

    fn dot(text: &str) -> String {
        let caps = Caps::default();
        let r = dsl::build_ring(text, &caps).unwrap();
        lattice_dot(&IdealLattice::enumerate(&r, &caps).unwrap()).unwrap()
    }

    fn count(s: &str, pat: &str) -> usize {
        s.lines().filter(|l| l.contains(pat)).count()
    }

    #[test]
    fn z12_shape() {
        let d = dot("Z12");
        assert_eq!(count(&d, "[label="), 6);
        assert_eq!(count(&d, " -> "), 7);
        assert!(d.contains("\"(4)\\nFFFTTT\""));
    }

    #[test]
    fn z2_shape() {
        let d = dot("Z2");
        assert_eq!(count(&d, "[label="), 2);
        assert_eq!(count(&d, " -> "), 1);
    }

    #[test]
    fn local_algebra_annotation() {
        let d = dot("LocalAlg(2)");
        assert!(d.contains("(x,y)\\nTTTTTT\\nm^2=0, m^3=0"), "{d}");
    }

    #[test]
    fn escaping() {
        assert_eq!(quote("a\"b\n"), "\"a\\\"b\\n\"");
    }
}
