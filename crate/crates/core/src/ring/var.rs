use std::fmt;

/// Variable families known to the engine.
///
/// The declaration order is the canonical family order used when comparing
/// monomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    /// Quotient Chern classes `c_i`.
    C,
    /// Source Chern classes (or, in localization, source roots) `a_i`.
    A,
    /// Target Chern classes `b_i`.
    B,
    /// Stiefel–Whitney classes `w_i`.
    W,
    /// Thom series variables `d_i`, any integer index.
    D,
    /// Residue variables `z_i`.
    Z,
    /// K-theory generating-function variables `x_i`.
    X,
    /// Torus characters `t_i`.
    T,
    /// Deformation parameter.
    Hbar,
    /// Auxiliary parameter `s` used by the motivic Segre substitution.
    S,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::C => "c",
            Family::A => "a",
            Family::B => "b",
            Family::W => "w",
            Family::D => "d",
            Family::Z => "z",
            Family::X => "x",
            Family::T => "t",
            Family::Hbar => "hbar",
            Family::S => "s",
        }
    }

    /// Whether variables of this family carry an index.
    pub fn indexed(self) -> bool {
        !matches!(self, Family::Hbar | Family::S)
    }
}

/// A single variable: family plus index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VarId {
    pub family: Family,
    pub index: i32,
}

impl VarId {
    /// Build a variable, checking the index range of its family.
    ///
    /// `d` accepts any integer; unindexed families require index 0; every
    /// other family requires index >= 1.
    pub fn new(family: Family, index: i32) -> Option<VarId> {
        let ok = match family {
            Family::D => true,
            Family::Hbar | Family::S => index == 0,
            _ => index >= 1,
        };
        ok.then_some(VarId { family, index })
    }

    pub fn c(i: i32) -> VarId {
        VarId::new(Family::C, i).expect("c index must be >= 1")
    }
    pub fn a(i: i32) -> VarId {
        VarId::new(Family::A, i).expect("a index must be >= 1")
    }
    pub fn b(i: i32) -> VarId {
        VarId::new(Family::B, i).expect("b index must be >= 1")
    }
    pub fn w(i: i32) -> VarId {
        VarId::new(Family::W, i).expect("w index must be >= 1")
    }
    pub fn d(i: i32) -> VarId {
        VarId { family: Family::D, index: i }
    }
    pub fn z(i: i32) -> VarId {
        VarId::new(Family::Z, i).expect("z index must be >= 1")
    }
    pub fn x(i: i32) -> VarId {
        VarId::new(Family::X, i).expect("x index must be >= 1")
    }
    pub fn t(i: i32) -> VarId {
        VarId::new(Family::T, i).expect("t index must be >= 1")
    }
    pub fn hbar() -> VarId {
        VarId { family: Family::Hbar, index: 0 }
    }
    pub fn s() -> VarId {
        VarId { family: Family::S, index: 0 }
    }

    /// Grading degree.
    pub fn degree(self) -> i64 {
        match self.family {
            Family::C | Family::A | Family::B | Family::W | Family::D => self.index as i64,
            Family::Z | Family::X | Family::T => 1,
            Family::Hbar | Family::S => 0,
        }
    }

    pub fn latex(self) -> String {
        match self.family {
            Family::Hbar => "\\hbar".to_string(),
            Family::S => "s".to_string(),
            f => format!("{}_{{{}}}", f.letter(), self.index),
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.indexed() {
            write!(f, "{}{}", self.family.letter(), self.index)
        } else {
            f.write_str(self.family.letter())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_ranges() {
        assert!(VarId::new(Family::C, 0).is_none());
        assert!(VarId::new(Family::D, -3).is_some());
        assert!(VarId::new(Family::Hbar, 1).is_none());
        assert_eq!(VarId::d(-3).to_string(), "d-3");
        assert_eq!(VarId::hbar().to_string(), "hbar");
    }

    #[test]
    fn grading() {
        assert_eq!(VarId::c(4).degree(), 4);
        assert_eq!(VarId::d(-2).degree(), -2);
        assert_eq!(VarId::t(7).degree(), 1);
        assert_eq!(VarId::s().degree(), 0);
    }
}
