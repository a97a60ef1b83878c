//! Text syntax for rings and ideals, and elaboration into [`FiniteRing`]s.

mod ast;
mod parser;

use std::sync::Arc;

pub use ast::{ideal_lit_text, write_ideal_lit, ElemLit, RingExpr};
pub use parser::{parse_elem_lit, parse_ideal_lit, parse_ring_expr};

use crate::caps::Caps;
use crate::error::{Error, Result, SyntaxError};
use crate::ideal::Ideal;
use crate::ring::{self, FiniteRing};

/// Parses a ring expression such as `Z2 x Z3` or `Idealize(Z4, (2))`.
pub fn parse_ring(text: &str) -> std::result::Result<RingExpr, SyntaxError> {
    parse_ring_expr(text)
}

/// Parses an ideal literal such as `(4)` or `((2,0),(0,3))` against `ring`.
pub fn parse_ideal(text: &str, ring: &Arc<FiniteRing>) -> Result<Ideal> {
    resolve_ideal(ring, &parse_ideal_lit(text)?)
}

/// Builds the ring an expression denotes. The result's `expr()` is `expr`.
pub fn elaborate(expr: &RingExpr, caps: &Caps) -> Result<Arc<FiniteRing>> {
    match expr {
        RingExpr::Zn(n) => ring::zn(*n, caps),
        RingExpr::LocalAlg(p) => ring::local_algebra(*p, caps),
        RingExpr::Product(a, b) => {
            let a = elaborate(a, caps)?;
            let b = elaborate(b, caps)?;
            ring::product(&a, &b, caps)
        }
        RingExpr::Quotient(r, gens) => {
            let base = elaborate(r, caps)?;
            let q = resolve_ideal(&base, gens)?;
            Ok(ring::construct::quotient_with_expr(&base, &q, expr.clone())?.0)
        }
        RingExpr::Localize(r, set) => {
            let base = elaborate(r, caps)?;
            let s = set.iter().map(|e| base.resolve(e)).collect::<Result<Vec<_>>>()?;
            Ok(ring::construct::localization_with_expr(&base, &s, caps, expr.clone())?.0)
        }
        RingExpr::Idealize(r, gens) => {
            let base = elaborate(r, caps)?;
            let j = resolve_ideal(&base, gens)?;
            ring::construct::idealization_with_expr(&base, &j, caps, expr.clone())
        }
    }
}

/// Parses and elaborates in one step.
pub fn build_ring(text: &str, caps: &Caps) -> Result<Arc<FiniteRing>> {
    elaborate(&parse_ring(text).map_err(Error::from)?, caps)
}

fn resolve_ideal(ring: &Arc<FiniteRing>, gens: &[ElemLit]) -> Result<Ideal> {
    let elems = gens.iter().map(|g| ring.resolve(g)).collect::<Result<Vec<_>>>()?;
    Ideal::generated(ring, &elems)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c() -> Caps {
        Caps::default()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_ring("Z12").unwrap(), RingExpr::Zn(12));
        assert_eq!(
            parse_ring("Z2 x Z3").unwrap(),
            RingExpr::product(RingExpr::Zn(2), RingExpr::Zn(3))
        );
        assert_eq!(
            parse_ring("Idealize(Z4, (2))").unwrap(),
            RingExpr::idealize(RingExpr::Zn(4), vec![ElemLit::Int(2)])
        );
    }

    #[test]
    fn print_examples() {
        assert_eq!(RingExpr::Zn(12).to_string(), "Z12");
        assert_eq!(RingExpr::product(RingExpr::Zn(2), RingExpr::Zn(3)).to_string(), "Z2 x Z3");
        assert_eq!(
            RingExpr::quotient(RingExpr::Zn(12), vec![ElemLit::Int(4)]).to_string(),
            "Z12/(4)"
        );
    }

    #[test]
    fn elaboration_keeps_expression() {
        for text in ["Z12/(4)", "Loc(Z12, 1, 3, 9)", "Idealize(Z4, (2))", "Z2 x Z3 x Z2", "(Z4 x Z2)/((2,0))"] {
            let expr = parse_ring(text).unwrap();
            let r = elaborate(&expr, &c()).unwrap();
            assert_eq!(r.expr(), &expr, "{text}");
        }
        assert_eq!(build_ring("Idealize(Z4, (2))", &c()).unwrap().size(), 8);
        assert_eq!(build_ring("Loc(Z12, 1, 3, 9)", &c()).unwrap().size(), 4);
    }

    #[test]
    fn ideal_literals() {
        let z12 = build_ring("Z12", &c()).unwrap();
        let four = parse_ideal("(4)", &z12).unwrap();
        assert_eq!(four.elements().collect::<Vec<_>>(), [0, 4, 8]);
        assert!(parse_ideal("(0)", &z12).unwrap().is_zero());
        assert!(parse_ideal("()", &z12).unwrap().is_zero());
        let p = build_ring("Z4 x Z9", &c()).unwrap();
        let i = parse_ideal("((2,0),(0,3))", &p).unwrap();
        assert_eq!(i.len(), 2 * 3);
        assert!(matches!(parse_ideal("(12)", &z12), Err(Error::ElementOutOfRange { .. })));
        assert!(matches!(parse_ideal("((1,1))", &z12), Err(Error::BadLiteral { .. })));
        assert!(matches!(parse_ideal("(4", &z12), Err(Error::Syntax(_))));
    }

    #[test]
    fn elaboration_errors() {
        assert!(matches!(build_ring("Z1", &c()), Err(Error::InvalidModulus(1))));
        assert!(matches!(build_ring("LocalAlg(4)", &c()), Err(Error::NotPrime(4))));
        assert!(matches!(build_ring("Z2000", &c()), Err(Error::CapExceeded { .. })));
        assert!(matches!(build_ring("Loc(Z6, 0)", &c()), Err(Error::ZeroInS)));
        assert!(matches!(build_ring("Z6 x", &c()), Err(Error::Syntax(_))));
    }
}
