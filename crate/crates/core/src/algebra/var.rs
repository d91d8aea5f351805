use core::fmt;

/// A formal variable of the engine.
///
/// The derived order is the variable order used everywhere: monomials are
/// sorted by it and linear factors are normalized to be monic in their least
/// variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// Generator of the circle's equivariant cohomology.
    Alpha,
    /// Chern root `y[i,j,k]`: level `i`, block `j`, slot `k` (all 1-based).
    Root { level: u8, block: u8, slot: u8 },
    /// Chern root of the trivial ambient bundle, slot `k`.
    Ambient(u8),
    /// Kähler parameter `t[i]`.
    Kahler(u8),
    /// Formal stand-in for `(r-1)·π·√-1`.
    FormalC,
    /// Torus weight `λ[k]`.
    TorusWeight(u8),
    /// Deformation parameter of the fixed-point oracle; weights are `s·λ`.
    Scale,
}

impl Var {
    pub fn root(level: usize, block: usize, slot: usize) -> Var {
        Var::Root {
            level: level as u8,
            block: block as u8,
            slot: slot as u8,
        }
    }

    pub fn ambient(slot: usize) -> Var {
        Var::Ambient(slot as u8)
    }

    pub fn kahler(i: usize) -> Var {
        Var::Kahler(i as u8)
    }

    pub fn is_root(self) -> bool {
        matches!(self, Var::Root { .. })
    }

    pub fn is_ambient(self) -> bool {
        matches!(self, Var::Ambient(_))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Var::Alpha => f.write_str("α"),
            Var::Root { level, block, slot } => write!(f, "y[{},{},{}]", level, block, slot),
            Var::Ambient(k) => write!(f, "e[{}]", k),
            Var::Kahler(i) => write!(f, "t[{}]", i),
            Var::FormalC => f.write_str("c"),
            Var::TorusWeight(k) => write!(f, "λ[{}]", k),
            Var::Scale => f.write_str("s"),
        }
    }
}
