use std::fmt;

use crate::SymError;

/// A variable name, packed into a `u64` so comparison and hashing are cheap.
///
/// Names are 1–8 ASCII bytes, starting with a letter, followed by letters,
/// digits or `_`. Packing is big-endian with zero padding, so the integer
/// order coincides with the lexicographic order of the names.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u64);

impl Var {
    /// `q^{1/2}`; the residue-field cardinality is `Q^2`.
    pub const Q: Var = Var::lit("Q");
    /// `q^{-s}`.
    pub const T: Var = Var::lit("T");
    /// Satake parameter α.
    pub const A: Var = Var::lit("A");
    /// Satake parameter β.
    pub const B: Var = Var::lit("B");
    /// Satake parameter γ.
    pub const G: Var = Var::lit("G");
    /// Twist value μ(ϖ).
    pub const U: Var = Var::lit("U");
    /// Bessel character value Λ(ϖ).
    pub const L: Var = Var::lit("L");
    /// Free series variable.
    pub const X: Var = Var::lit("X");

    const fn lit(s: &str) -> Var {
        let b = s.as_bytes();
        let mut v: u64 = 0;
        let mut i = 0;
        while i < 8 {
            v <<= 8;
            if i < b.len() {
                v |= b[i] as u64;
            }
            i += 1;
        }
        Var(v)
    }

    /// Build a variable from its name, validating the character set.
    pub fn new(name: &str) -> Result<Var, SymError> {
        let b = name.as_bytes();
        let ok = !b.is_empty()
            && b.len() <= 8
            && b[0].is_ascii_alphabetic()
            && b.iter().all(|c| c.is_ascii_alphanumeric() || *c == b'_');
        if !ok {
            return Err(SymError::BadVarName(name.to_string()));
        }
        Ok(Var::lit(name))
    }

    pub fn name(&self) -> String {
        self.0
            .to_be_bytes()
            .iter()
            .filter(|c| **c != 0)
            .map(|c| *c as char)
            .collect()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_names() {
        for n in ["Q", "T", "kappa", "X1", "a_b", "ABCDEFGH"] {
            assert_eq!(Var::new(n).unwrap().name(), n);
        }
        assert_eq!(Var::new("Q").unwrap(), Var::Q);
    }

    #[test]
    fn order_is_lexicographic() {
        let a = Var::new("A").unwrap();
        let ab = Var::new("AB").unwrap();
        let b = Var::new("B").unwrap();
        assert!(a < ab && ab < b);
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Var::new("").is_err());
        assert!(Var::new("1x").is_err());
        assert!(Var::new("toolongname").is_err());
        assert!(Var::new("a-b").is_err());
    }
}
