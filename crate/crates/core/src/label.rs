//! Vertices of the hypercube `Q_n` as packed bit strings.
//!
//! A string `u_1 u_2 ... u_n` is stored with `u_1` in the least significant
//! bit. The textual form keeps the left-to-right order, so `"110"` has
//! `bits == 0b011`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest representable dimension.
pub const MAX_DIM: u32 = 64;

/// Mask with the low `n` bits set.
#[inline]
pub fn dim_mask(n: u32) -> u64 {
    debug_assert!(n <= MAX_DIM);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_dim(n: u32) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge { n, max: MAX_DIM });
    }
    Ok(())
}

/// Writes `bits` as an `n`-character string, coordinate 1 first.
pub(crate) fn write_bits(bits: u64, n: u32, f: &mut impl fmt::Write) -> fmt::Result {
    for i in 0..n {
        f.write_char(if bits >> i & 1 == 1 { '1' } else { '0' })?;
    }
    Ok(())
}

pub(crate) fn format_bits(bits: u64, n: u32) -> String {
    let mut s = String::with_capacity(n as usize);
    write_bits(bits, n, &mut s).expect("writing to a String cannot fail");
    s
}

/// A vertex of `Q_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexLabel {
    bits: u64,
    n: u32,
}

impl VertexLabel {
    pub fn new(bits: u64, n: u32) -> Result<Self> {
        check_dim(n)?;
        if bits & !dim_mask(n) != 0 {
            return Err(Error::LabelOutOfRange { bits, n });
        }
        Ok(Self { bits, n })
    }

    /// `0^n`.
    pub fn zero(n: u32) -> Result<Self> {
        Self::new(0, n)
    }

    /// `1^n`.
    pub fn ones(n: u32) -> Result<Self> {
        check_dim(n)?;
        Ok(Self {
            bits: dim_mask(n),
            n,
        })
    }

    pub(crate) fn from_raw(bits: u64, n: u32) -> Self {
        debug_assert!(n <= MAX_DIM && bits & !dim_mask(n) == 0);
        Self { bits, n }
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn dim(self) -> u32 {
        self.n
    }

    /// Number of coordinates equal to 1.
    #[inline]
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinate `u_{i+1}` (zero-based direction `i`).
    #[inline]
    pub fn coord(self, i: u32) -> bool {
        i < self.n && self.bits >> i & 1 == 1
    }

    /// The componentwise order: `self <= other` iff every 1 of `self` is a 1 of `other`.
    #[inline]
    pub fn is_below(self, other: VertexLabel) -> bool {
        self.bits & other.bits == self.bits
    }

    pub fn hamming(self, other: VertexLabel) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// Parses the left-to-right string form; the dimension is the string length.
    pub fn parse(text: &str) -> Result<Self> {
        let n = text.chars().count();
        if n > MAX_DIM as usize {
            return Err(Error::BadBitString {
                text: text.to_string(),
                reason: format!("longer than {MAX_DIM} characters"),
            });
        }
        let mut bits = 0u64;
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::BadBitString {
                        text: text.to_string(),
                        reason: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(Self { bits, n: n as u32 })
    }

    /// Parses a string that must have exactly `n` characters.
    pub fn parse_with_dim(text: &str, n: u32) -> Result<Self> {
        let label = Self::parse(text)?;
        if label.n != n {
            return Err(Error::BadBitString {
                text: text.to_string(),
                reason: format!("expected length {n}, found {}", label.n),
            });
        }
        Ok(label)
    }
}

/// Labels of equal dimension order by integer value.
impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.bits).cmp(&(other.n, other.bits))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(self.bits, self.n, f)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coordinate_is_lowest_bit() {
        let u = VertexLabel::parse("110").unwrap();
        assert_eq!(u.bits(), 0b011);
        assert_eq!(u.dim(), 3);
        assert!(u.coord(0) && u.coord(1) && !u.coord(2));
        assert_eq!(u.to_string(), "110");
    }

    #[test]
    fn empty_string_is_the_dimension_zero_vertex() {
        let e = VertexLabel::parse("").unwrap();
        assert_eq!((e.bits(), e.dim()), (0, 0));
        assert_eq!(e.to_string(), "");
    }

    #[test]
    fn partial_order() {
        let a = VertexLabel::parse("100").unwrap();
        let b = VertexLabel::parse("110").unwrap();
        let c = VertexLabel::parse("011").unwrap();
        assert!(a.is_below(b));
        assert!(!b.is_below(a));
        assert!(!a.is_below(c) && !c.is_below(a));
        assert!(VertexLabel::zero(3).unwrap().is_below(c));
    }

    #[test]
    fn rejects_out_of_range_bits() {
        assert!(matches!(
            VertexLabel::new(0b1000, 3),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert!(VertexLabel::new(u64::MAX, 64).is_ok());
        assert!(matches!(
            VertexLabel::new(0, 65),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(VertexLabel::parse("10x").is_err());
        assert!(VertexLabel::parse_with_dim("10", 3).is_err());
        assert!(VertexLabel::parse(&"0".repeat(65)).is_err());
        assert_eq!(dim_mask(64), u64::MAX);
        assert_eq!(dim_mask(0), 0);
    }
}
