use std::fmt;

use serde::Serialize;

use crate::algebra::{Basis, Hypercomplex};
use crate::scale::Scale;

/// A coefficient of the form `sign * t^power` with `sign ∈ {-1, 0, 1}`,
/// `power ∈ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymCoef {
    pub sign: i8,
    pub t_power: u8,
}

impl SymCoef {
    pub const ZERO: SymCoef = SymCoef { sign: 0, t_power: 0 };

    pub fn eval(self, t: f64) -> f64 {
        let s = f64::from(self.sign);
        if self.t_power == 0 {
            s
        } else {
            s * t
        }
    }
}

/// One entry of the multiplication table: `coef * unit`, exact in `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymEntry {
    pub coef: SymCoef,
    pub unit: Basis,
}

impl SymEntry {
    pub fn new(sign: i8, t_power: u8, unit: Basis) -> Self {
        SymEntry { coef: SymCoef { sign, t_power }, unit }
    }

    /// The entry after substituting a numeric `t`.
    ///
    /// A vanishing coefficient (`t = 0` with `t_power = 1`) is reported as
    /// the zero element.
    pub fn eval(self, scale: Scale) -> Hypercomplex {
        let mut x = [0.0; 4];
        x[self.unit.index()] = self.coef.eval(scale.t()) + 0.0;
        Hypercomplex::from_raw(scale, x)
    }

    /// Whether the entry is identically zero at the given scale.
    pub fn vanishes_at(self, scale: Scale) -> bool {
        self.coef.eval(scale.t()) == 0.0
    }
}

impl fmt::Display for SymEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.sign == 0 {
            return write!(f, "0");
        }
        let minus = if self.coef.sign < 0 { "-" } else { "" };
        match (self.coef.t_power, self.unit) {
            (0, u) => write!(f, "{minus}{}", u.symbol()),
            (_, Basis::One) => write!(f, "{minus}t"),
            (_, u) => write!(f, "{minus}t{}", u.symbol()),
        }
    }
}

impl Serialize for SymEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Gaussian unit `re + im i` with one of `re`, `im` equal to ±1.
#[derive(Clone, Copy)]
struct Gauss(i8, i8);

impl Gauss {
    fn mul(self, o: Gauss) -> Gauss {
        Gauss(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }

    fn conj(self) -> Gauss {
        Gauss(self.0, -self.1)
    }
}

enum Slot {
    A(Gauss),
    B(Gauss),
}

fn pair_of(u: Basis) -> Slot {
    match u {
        Basis::One => Slot::A(Gauss(1, 0)),
        Basis::I => Slot::A(Gauss(0, 1)),
        Basis::J => Slot::B(Gauss(1, 0)),
        Basis::K => Slot::B(Gauss(0, 1)),
    }
}

/// Symbolic product of two basis units, following
/// `(a1, b1)(a2, b2) = (a1 a2 + t b1 conj(b2), a1 b2 + b1 conj(a2))`.
pub fn basis_product(left: Basis, right: Basis) -> SymEntry {
    let (slot_is_a, g, t_power) = match (pair_of(left), pair_of(right)) {
        (Slot::A(a1), Slot::A(a2)) => (true, a1.mul(a2), 0),
        (Slot::B(b1), Slot::B(b2)) => (true, b1.mul(b2.conj()), 1),
        (Slot::A(a1), Slot::B(b2)) => (false, a1.mul(b2), 0),
        (Slot::B(b1), Slot::A(a2)) => (false, b1.mul(a2.conj()), 0),
    };
    let (unit, sign) = match (slot_is_a, g) {
        (true, Gauss(r, 0)) => (Basis::One, r),
        (true, Gauss(0, m)) => (Basis::I, m),
        (false, Gauss(r, 0)) => (Basis::J, r),
        (false, Gauss(0, m)) => (Basis::K, m),
        _ => unreachable!("basis products are Gaussian units"),
    };
    SymEntry::new(sign, t_power, unit)
}

/// The 4×4 table of basis products, rows = left factor, columns = right factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MulTable {
    pub entries: [[SymEntry; 4]; 4],
}

impl MulTable {
    pub fn symbolic() -> Self {
        let entries = Basis::ALL.map(|l| Basis::ALL.map(|r| basis_product(l, r)));
        MulTable { entries }
    }

    pub fn get(&self, left: Basis, right: Basis) -> SymEntry {
        self.entries[left.index()][right.index()]
    }

    pub fn evaluate(&self, scale: Scale) -> [[Hypercomplex; 4]; 4] {
        self.entries.map(|row| row.map(|e| e.eval(scale)))
    }
}

/// The numeric multiplication table at a given scale.
pub fn mul_table(scale: Scale) -> [[Hypercomplex; 4]; 4] {
    MulTable::symbolic().evaluate(scale)
}
