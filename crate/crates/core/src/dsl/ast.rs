use std::fmt;

/// Ring construction expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingExpr {
    /// `Zn`: integers modulo n.
    Zn(u64),
    /// `R x S`: componentwise product.
    Product(Box<RingExpr>, Box<RingExpr>),
    /// `R/(g, ...)`: quotient by the ideal generated by the literals.
    Quotient(Box<RingExpr>, Vec<ElemLit>),
    /// `Loc(R, s, ...)`: ring of fractions over the listed multiplicative set.
    Localize(Box<RingExpr>, Vec<ElemLit>),
    /// `Idealize(R, (g, ...))`: trivial extension R ⋉ R/J.
    Idealize(Box<RingExpr>, Vec<ElemLit>),
    /// `LocalAlg(p)`: F_p[x, y]/(x², xy, y²).
    LocalAlg(u64),
}

/// Element literal: a bare integer or a pair for product-like rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElemLit {
    Int(u64),
    Pair(Box<ElemLit>, Box<ElemLit>),
}

impl ElemLit {
    pub fn pair(a: ElemLit, b: ElemLit) -> Self {
        ElemLit::Pair(Box::new(a), Box::new(b))
    }
}

impl RingExpr {
    pub fn product(a: RingExpr, b: RingExpr) -> Self {
        RingExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn quotient(r: RingExpr, gens: Vec<ElemLit>) -> Self {
        RingExpr::Quotient(Box::new(r), gens)
    }

    pub fn localize(r: RingExpr, set: Vec<ElemLit>) -> Self {
        RingExpr::Localize(Box::new(r), set)
    }

    pub fn idealize(r: RingExpr, gens: Vec<ElemLit>) -> Self {
        RingExpr::Idealize(Box::new(r), gens)
    }

    /// Factors of a left- or right-nested product, flattened in order.
    pub fn product_factors(&self) -> Vec<&RingExpr> {
        match self {
            RingExpr::Product(a, b) => {
                let mut out = a.product_factors();
                out.extend(b.product_factors());
                out
            }
            other => vec![other],
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            RingExpr::Zn(_) | RingExpr::LocalAlg(_) => 1,
            RingExpr::Product(a, b) => 1 + a.depth().max(b.depth()),
            RingExpr::Quotient(r, _) | RingExpr::Localize(r, _) | RingExpr::Idealize(r, _) => 1 + r.depth(),
        }
    }
}

impl fmt::Display for ElemLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLit::Int(v) => write!(f, "{v}"),
            ElemLit::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Writes `(a,b,...)`.
pub fn write_ideal_lit(f: &mut impl fmt::Write, gens: &[ElemLit]) -> fmt::Result {
    f.write_char('(')?;
    for (i, g) in gens.iter().enumerate() {
        if i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{g}")?;
    }
    f.write_char(')')
}

pub fn ideal_lit_text(gens: &[ElemLit]) -> String {
    let mut s = String::new();
    write_ideal_lit(&mut s, gens).expect("writing to a String cannot fail");
    s
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::LocalAlg(p) => write!(f, "LocalAlg({p})"),
            RingExpr::Product(a, b) => {
                // Product is left-associative, so only a product on the right needs parens.
                write!(f, "{a} x ")?;
                if matches!(**b, RingExpr::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            RingExpr::Quotient(r, gens) => {
                if matches!(**r, RingExpr::Product(..) | RingExpr::Quotient(..)) {
                    write!(f, "({r})/")?;
                } else {
                    write!(f, "{r}/")?;
                }
                write_ideal_lit(f, gens)
            }
            RingExpr::Localize(r, set) => {
                write!(f, "Loc({r}")?;
                for s in set {
                    write!(f, ", {s}")?;
                }
                f.write_char(')')
            }
            RingExpr::Idealize(r, gens) => {
                write!(f, "Idealize({r}, ")?;
                write_ideal_lit(f, gens)?;
                f.write_char(')')
            }
        }
    }
}

use std::fmt::Write as _;
