use core::fmt;
use core::ops::{Mul, Neg};
use core::str::FromStr;

use crate::error::{invalid, Error};

/// A `Z₂` sign: relative parity of a level, or the parity class of `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    /// `(-1)^k`.
    pub fn from_exponent(k: u64) -> Self {
        if k.is_multiple_of(2) {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }

    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(Parity::Plus),
            -1 => Some(Parity::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Parity::Plus => '+',
            Parity::Minus => '-',
        }
    }

    /// Name used when the sign stands for the parity of `λ`.
    pub fn lambda_name(self) -> &'static str {
        match self {
            Parity::Plus => "even",
            Parity::Minus => "odd",
        }
    }
}

impl Neg for Parity {
    type Output = Parity;
    fn neg(self) -> Parity {
        match self {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        }
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Plus
        } else {
            Parity::Minus
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Parity {
    type Err = Error;

    /// Accepts `+`, `-`, `−`, `plus`, `minus`, `even`, `odd`, `1`, `-1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "+" | "plus" | "even" | "1" | "+1" => Ok(Parity::Plus),
            "-" | "\u{2212}" | "minus" | "odd" | "-1" => Ok(Parity::Minus),
            other => Err(invalid(alloc::format!("unrecognized parity `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        assert_eq!(Parity::from_exponent(3), Parity::Minus);
        assert_eq!(Parity::from_exponent(0), Parity::Plus);
        assert_eq!(Parity::Minus * Parity::Minus, Parity::Plus);
        assert_eq!(-Parity::Plus, Parity::Minus);
        assert_eq!("odd".parse::<Parity>().unwrap(), Parity::Minus);
        assert!("x".parse::<Parity>().is_err());
    }
}
