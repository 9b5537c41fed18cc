//! Exact rational linear algebra.
//!
//! Everything downstream (evaluation kernels, T2 spans, character traces)
//! reduces to incremental echelon computations over Q. The engine works on
//! integer rows after clearing denominators (fraction-free, Bareiss-style
//! two-term updates with content reduction) and keeps a reduced echelon
//! form at all times, so subspaces have a canonical representative and
//! results do not depend on insertion batching.
//!
//! Machine-word arithmetic is used while it fits; a row space silently
//! upgrades itself to big integers on overflow, so results are always
//! exact.

mod matrix;
mod rowspace;
mod subspace;

pub use matrix::QMatrix;
pub use rowspace::{IntRowSpace, KernelAccumulator};
pub use subspace::Subspace;

pub(crate) use rowspace::clear_denominators;

/// Exact scalar: arbitrary-precision rational, always stored reduced with a
/// positive denominator (`num::BigRational` maintains both invariants).
pub type Rational = num::BigRational;

pub(crate) type BigInt = num::BigInt;

/// Shorthand for small rational constants.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Canonical text form: reduced `num/den`, integers without denominator.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `num` or `num/den` (reduced on construction).
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n.parse().map_err(|_| crate::Error::Parse {
        pos: 0,
        msg: format!("bad rational '{s}'"),
    })?;
    let denom: BigInt = d.parse().map_err(|_| crate::Error::Parse {
        pos: 0,
        msg: format!("bad rational '{s}'"),
    })?;
    if denom == BigInt::from(0) {
        return Err(crate::Error::Parse {
            pos: 0,
            msg: format!("zero denominator in '{s}'"),
        });
    }
    Ok(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["0", "5", "-7", "2/3", "-11/4"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        // unreduced input comes back reduced
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
    }
}
