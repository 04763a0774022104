//! Generators for the three stick-breaking sequences and sorted prefixes.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{ArcScalar, CircleValue, FloatValue, Fraction, GoldenInt, Rational};

/// Gaps below this size in the log sequence cannot be ordered honestly.
const FLOAT_TIE_THRESHOLD: f64 = 8.881_784_197_001_252e-16; // 2^-50

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Radical inverse of `m` in the given base (`base >= 2`).
    VanDerCorput { base: u32 },
    /// `{m·φ}` with φ the golden ratio.
    KroneckerGolden,
    /// `log₂(2m − 1) mod 1`.
    DeBruijnErdosLog,
}

impl SequenceKind {
    pub const VDC2: SequenceKind = SequenceKind::VanDerCorput { base: 2 };

    pub fn is_exact(&self) -> bool {
        !matches!(self, SequenceKind::DeBruijnErdosLog)
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::VanDerCorput { base: 2 } => f.write_str("vdc2"),
            SequenceKind::VanDerCorput { base } => write!(f, "vdc:{base}"),
            SequenceKind::KroneckerGolden => f.write_str("kronecker-phi"),
            SequenceKind::DeBruijnErdosLog => f.write_str("debruijn-log"),
        }
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "vdc2" => Ok(SequenceKind::VDC2),
            "kronecker-phi" => Ok(SequenceKind::KroneckerGolden),
            "debruijn-log" => Ok(SequenceKind::DeBruijnErdosLog),
            other => {
                let base = other
                    .strip_prefix("vdc:")
                    .and_then(|b| b.parse::<u32>().ok())
                    .filter(|&b| b >= 2)
                    .ok_or_else(|| Error::Parse(format!("unknown sequence kind {other:?}")))?;
                Ok(SequenceKind::VanDerCorput { base })
            }
        }
    }
}

impl Serialize for SequenceKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SequenceKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Digit reversal of `m` in base `b` placed after the radix point.
///
/// The result has denominator `b^d` where `d` is the number of base-`b`
/// digits of `m`.
pub fn radical_inverse(m: u64, base: u32) -> Rational {
    assert!(base >= 2, "base must be at least 2");
    let b = BigInt::from(base);
    let (mut num, mut den) = (BigInt::from(0), BigInt::from(1));
    let mut rest = m;
    while rest > 0 {
        num = num * &b + (rest % base as u64);
        den *= &b;
        rest /= base as u64;
    }
    Rational::new(num, den)
}

/// [`radical_inverse`] on machine words; panics if `b^digits` overflows.
pub fn radical_inverse_fraction(m: u64, base: u32) -> Fraction {
    assert!(base >= 2, "base must be at least 2");
    let b = base as i64;
    let (mut num, mut den) = (0i64, 1i64);
    let mut rest = m;
    while rest > 0 {
        num = num * b + (rest % base as u64) as i64;
        den = den.checked_mul(b).expect("radical inverse denominator overflow");
        rest /= base as u64;
    }
    Ratio::new(num, den)
}

/// Numerator of the base-2 radical inverse of `m` over `2^bits`
/// (requires `m < 2^bits`).
#[inline]
pub fn bit_reverse(m: u64, bits: u32) -> u64 {
    debug_assert!(bits == 64 || m < 1u64 << bits);
    if bits == 0 {
        0
    } else {
        m.reverse_bits() >> (64 - bits)
    }
}

/// Number of binary digits of `n` (0 for 0).
#[inline]
pub fn bit_length(n: u64) -> u32 {
    64 - n.leading_zeros()
}

/// The `m`-th sequence element (`m >= 1`).
pub fn sequence_point(kind: SequenceKind, m: u64) -> CircleValue {
    assert!(m >= 1, "sequence indices start at 1");
    match kind {
        SequenceKind::VanDerCorput { base } => CircleValue::Rational(radical_inverse(m, base)),
        SequenceKind::KroneckerGolden => {
            CircleValue::Golden(GoldenInt::frac_of_multiple(m as i64).to_golden())
        }
        SequenceKind::DeBruijnErdosLog => CircleValue::Float(FloatValue::log2_mod1(2 * m - 1)),
    }
}

/// The first `n` elements of a sequence sorted on the circle.
#[derive(Clone, Debug)]
pub struct Prefix<S> {
    kind: SequenceKind,
    n: u64,
    include_origin: bool,
    points: Vec<S>,
    index_map: Vec<u64>,
}

impl<S: ArcScalar> Prefix<S> {
    /// Sorts `(sequence index, coordinate)` pairs; index 0 is the origin.
    pub fn from_indexed(
        kind: SequenceKind,
        n: u64,
        include_origin: bool,
        mut indexed: Vec<(u64, S)>,
    ) -> Result<Self> {
        indexed.sort_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)));
        for w in indexed.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(Error::DuplicatePoint {
                    first: w[0].0,
                    second: w[1].0,
                    value: format!("{:?}", w[0].1),
                });
            }
        }
        let (index_map, points) = indexed.into_iter().unzip();
        Ok(Prefix {
            kind,
            n,
            include_origin,
            points,
            index_map,
        })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// Number of sequence elements (the origin is not counted).
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn include_origin(&self) -> bool {
        self.include_origin
    }

    /// Number of stored points, `n` or `n + 1`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Sorted coordinates.
    pub fn coords(&self) -> &[S] {
        &self.points
    }

    /// Sequence index of each sorted position (0 for the origin).
    pub fn index_map(&self) -> &[u64] {
        &self.index_map
    }

    pub fn points(&self) -> Vec<CircleValue> {
        self.points.iter().map(ArcScalar::to_circle_value).collect()
    }

    pub fn rows(&self) -> Vec<PrefixRow> {
        self.index_map
            .iter()
            .zip(&self.points)
            .enumerate()
            .map(|(pos, (idx, x))| PrefixRow {
                sorted_pos: pos as u64,
                seq_index: *idx,
                value_exact: x.to_circle_value().to_string(),
                value_float: x.to_f64(),
            })
            .collect()
    }

    /// Writes `sorted_pos,seq_index,value_exact,value_float`.
    pub fn write_csv<W: Write>(&self, writer: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(writer);
        for row in self.rows() {
            out.serialize(row)?;
        }
        out.flush()?;
        Ok(())
    }
}

/// One line of the prefix CSV export.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrefixRow {
    pub sorted_pos: u64,
    pub seq_index: u64,
    pub value_exact: String,
    pub value_float: f64,
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("prefix length n must be at least 1".into()))
    } else {
        Ok(())
    }
}

impl Prefix<Fraction> {
    pub fn van_der_corput(base: u32, n: u64, include_origin: bool) -> Result<Self> {
        check_n(n)?;
        if base < 2 {
            return Err(Error::InvalidArgument(format!("base {base} < 2")));
        }
        let start = if include_origin { 0 } else { 1 };
        let indexed = (start..=n)
            .map(|m| (m, radical_inverse_fraction(m, base)))
            .collect();
        Prefix::from_indexed(SequenceKind::VanDerCorput { base }, n, include_origin, indexed)
    }
}

impl Prefix<GoldenInt> {
    pub fn kronecker(n: u64, include_origin: bool) -> Result<Self> {
        check_n(n)?;
        let start = if include_origin { 0 } else { 1 };
        let indexed = (start..=n)
            .map(|m| (m, GoldenInt::frac_of_multiple(m as i64)))
            .collect();
        Prefix::from_indexed(SequenceKind::KroneckerGolden, n, include_origin, indexed)
    }
}

impl Prefix<FloatValue> {
    /// The first element is already `log₂ 1 = 0`, so asking for an extra
    /// origin yields [`Error::DuplicatePoint`].
    pub fn debruijn_log(n: u64, include_origin: bool) -> Result<Self> {
        check_n(n)?;
        let mut indexed: Vec<(u64, FloatValue)> = (1..=n)
            .map(|m| (m, FloatValue::log2_mod1(2 * m - 1)))
            .collect();
        if include_origin {
            indexed.push((0, FloatValue::from_f64(0.0)));
        }
        let prefix = Prefix::from_indexed(SequenceKind::DeBruijnErdosLog, n, include_origin, indexed)?;
        for (i, w) in prefix.points.windows(2).enumerate() {
            if (w[1] - w[0]).to_f64() < FLOAT_TIE_THRESHOLD {
                return Err(Error::PrecisionWarning(format!(
                    "points at sorted positions {i} and {} are closer than 2^-50",
                    i + 1
                )));
            }
        }
        Ok(prefix)
    }
}

/// A prefix of any supported sequence.
#[derive(Clone, Debug)]
pub enum AnyPrefix {
    Radix(Prefix<Fraction>),
    Golden(Prefix<GoldenInt>),
    Log(Prefix<FloatValue>),
}

/// Generates and sorts the first `n` elements of `kind`.
pub fn build_prefix(kind: SequenceKind, n: u64, include_origin: bool) -> Result<AnyPrefix> {
    Ok(match kind {
        SequenceKind::VanDerCorput { base } => {
            AnyPrefix::Radix(Prefix::van_der_corput(base, n, include_origin)?)
        }
        SequenceKind::KroneckerGolden => AnyPrefix::Golden(Prefix::kronecker(n, include_origin)?),
        SequenceKind::DeBruijnErdosLog => {
            AnyPrefix::Log(Prefix::debruijn_log(n, include_origin)?)
        }
    })
}

/// Applies a generic expression to whichever prefix variant is present.
#[macro_export]
macro_rules! with_prefix {
    ($any:expr, $p:ident => $body:expr) => {
        match $any {
            $crate::sequences::AnyPrefix::Radix($p) => $body,
            $crate::sequences::AnyPrefix::Golden($p) => $body,
            $crate::sequences::AnyPrefix::Log($p) => $body,
        }
    };
}

impl AnyPrefix {
    pub fn kind(&self) -> SequenceKind {
        with_prefix!(self, p => p.kind())
    }

    pub fn len(&self) -> usize {
        with_prefix!(self, p => p.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<CircleValue> {
        with_prefix!(self, p => p.points())
    }

    pub fn index_map(&self) -> &[u64] {
        with_prefix!(self, p => p.index_map())
    }

    pub fn rows(&self) -> Vec<PrefixRow> {
        with_prefix!(self, p => p.rows())
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> csv::Result<()> {
        with_prefix!(self, p => p.write_csv(writer))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(p: i64, q: i64) -> Fraction {
        Ratio::new(p, q)
    }

    #[test]
    fn radical_inverse_examples() {
        assert_eq!(radical_inverse(1, 2), Rational::new(1, 2));
        assert_eq!(radical_inverse(5, 2), Rational::new(5, 8));
        // 6 = (20)_3, reversed 0.02 = 2/9
        assert_eq!(radical_inverse(6, 3), Rational::new(2, 9));
        let listed = [(1, 2), (1, 4), (3, 4), (1, 8), (5, 8), (3, 8), (7, 8)];
        for (m, (p, q)) in (1..).zip(listed) {
            assert_eq!(radical_inverse(m, 2), Rational::new(p, q));
            assert_eq!(radical_inverse_fraction(m, 2), frac(p, q));
        }
    }

    #[test]
    fn bit_reverse_matches_radical_inverse() {
        for m in 1..1000u64 {
            let bits = bit_length(m);
            assert_eq!(
                frac(bit_reverse(m, bits) as i64, 1 << bits),
                radical_inverse_fraction(m, 2)
            );
        }
    }

    #[test]
    fn sequence_point_examples() {
        assert_eq!(
            sequence_point(SequenceKind::VDC2, 3),
            CircleValue::Rational(Rational::new(3, 4))
        );
        let phi_frac = crate::exact::GoldenNumber::new(Rational::new(-1, 2), Rational::new(1, 2));
        assert_eq!(
            sequence_point(SequenceKind::KroneckerGolden, 1),
            CircleValue::Golden(phi_frac)
        );
        assert_eq!(sequence_point(SequenceKind::DeBruijnErdosLog, 1).to_f64(), 0.0);
    }

    #[test]
    fn small_vdc_prefix() {
        let p = Prefix::van_der_corput(2, 3, true).unwrap();
        assert_eq!(p.coords(), &[frac(0, 1), frac(1, 4), frac(1, 2), frac(3, 4)]);
        assert_eq!(p.index_map(), &[0, 2, 1, 3]);
    }

    #[test]
    fn x53_of_660_prefix() {
        let p = Prefix::van_der_corput(2, 660, true).unwrap();
        assert_eq!(p.coords()[53], frac(5, 64));
        assert_eq!(p.coords()[1], frac(1, 1024));
        assert_eq!(p.coords()[2], frac(1, 512));
        assert_eq!(p.coords()[4], frac(5, 1024));
        assert_eq!(*p.coords().last().unwrap(), frac(511, 512));
    }

    #[test]
    fn kronecker_order_of_four() {
        // exact order: {3φ}≈.854, {φ}≈.618, {4φ}≈.472, {2φ}≈.236
        let p = Prefix::kronecker(4, true).unwrap();
        assert_eq!(p.index_map(), &[0, 2, 4, 1, 3]);
    }

    #[test]
    fn equispaced_power_of_two_prefixes() {
        for k in 1..=10u32 {
            let n = (1u64 << k) - 1;
            let p = Prefix::van_der_corput(2, n, true).unwrap();
            for (j, x) in p.coords().iter().enumerate() {
                assert_eq!(*x, frac(j as i64, 1 << k));
            }
        }
    }

    #[test]
    fn log_prefix_rejects_extra_origin() {
        assert!(matches!(
            Prefix::debruijn_log(5, true),
            Err(Error::DuplicatePoint { .. })
        ));
        let p = Prefix::debruijn_log(5, false).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.index_map()[0], 1);
    }

    #[test]
    fn duplicate_detection() {
        let pts = vec![(1, frac(1, 2)), (2, frac(1, 4)), (3, frac(2, 4))];
        let err = Prefix::from_indexed(SequenceKind::VDC2, 3, false, pts).unwrap_err();
        assert!(matches!(err, Error::DuplicatePoint { first: 1, second: 3, .. }));
    }

    #[test]
    fn kind_strings() {
        for s in ["vdc2", "vdc:3", "vdc:10", "kronecker-phi", "debruijn-log"] {
            assert_eq!(s.parse::<SequenceKind>().unwrap().to_string(), s);
        }
        assert_eq!("vdc:2".parse::<SequenceKind>().unwrap(), SequenceKind::VDC2);
        assert!("vdc:1".parse::<SequenceKind>().is_err());
        assert!("halton".parse::<SequenceKind>().is_err());
    }

    #[test]
    fn csv_export() {
        let p = Prefix::kronecker(2, false).unwrap();
        let mut buf = Vec::new();
        p.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("sorted_pos,seq_index,value_exact,value_float"));
        assert!(lines.next().unwrap().starts_with("0,2,(-2/1)+(1/1)sqrt5,0.236"));
    }

    #[test]
    fn zero_length_prefix_is_rejected() {
        assert!(build_prefix(SequenceKind::VDC2, 0, true).is_err());
    }
}
