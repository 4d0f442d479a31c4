//! Binary extension fields GF(2^s), 2 ≤ s ≤ 32.
//!
//! Elements are polynomials over GF(2) packed into the low `s` bits of a
//! `u32`. Addition is XOR; multiplication is carry-less multiplication
//! followed by reduction modulo a fixed irreducible polynomial.

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use thiserror::Error;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 32;

/// Low-weight irreducible polynomials, indexed by degree. Bit `i` is the
/// coefficient of `x^i`; the leading term is included.
const MODULI: [u64; 33] = [
    0,
    0,
    0x7,         // x^2 + x + 1
    0xb,         // x^3 + x + 1
    0x13,        // x^4 + x + 1
    0x25,        // x^5 + x^2 + 1
    0x43,        // x^6 + x + 1
    0x83,        // x^7 + x + 1
    0x11b,       // x^8 + x^4 + x^3 + x + 1
    0x211,       // x^9 + x^4 + 1
    0x409,       // x^10 + x^3 + 1
    0x805,       // x^11 + x^2 + 1
    0x1009,      // x^12 + x^3 + 1
    0x201b,      // x^13 + x^4 + x^3 + x + 1
    0x4021,      // x^14 + x^5 + 1
    0x8003,      // x^15 + x + 1
    0x1002b,     // x^16 + x^5 + x^3 + x + 1
    0x20009,     // x^17 + x^3 + 1
    0x40081,     // x^18 + x^7 + 1
    0x80027,     // x^19 + x^5 + x^2 + x + 1
    0x100009,    // x^20 + x^3 + 1
    0x200005,    // x^21 + x^2 + 1
    0x400003,    // x^22 + x + 1
    0x800021,    // x^23 + x^5 + 1
    0x100001b,   // x^24 + x^4 + x^3 + x + 1
    0x2000009,   // x^25 + x^3 + 1
    0x400001b,   // x^26 + x^4 + x^3 + x + 1
    0x8000027,   // x^27 + x^5 + x^2 + x + 1
    0x10000003,  // x^28 + x + 1
    0x20000005,  // x^29 + x^2 + 1
    0x40000003,  // x^30 + x + 1
    0x80000009,  // x^31 + x^3 + 1
    0x10000008d, // x^32 + x^7 + x^3 + x^2 + 1
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field degree {0} unsupported (need {MIN_DEGREE}..={MAX_DEGREE})")]
    UnsupportedDegree(u32),
    #[error("k = {0} needs a field larger than GF(2^{MAX_DEGREE})")]
    UnsupportedK(usize),
    #[error("modulus {modulus:#x} is not an irreducible polynomial of degree {degree}")]
    Reducible { degree: u32, modulus: u64 },
    #[error("operands belong to GF(2^{0}) and GF(2^{1})")]
    MixedFields(u32, u32),
    #[error("value {value:#x} does not fit in GF(2^{degree})")]
    ValueOutOfRange { value: u64, degree: u32 },
}

/// Parameters of GF(2^s): the degree and the reduction polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    degree: u32,
    modulus: u64,
}

/// An element of some GF(2^s). Carries its degree so that operands from
/// different fields can be rejected.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    bits: u32,
    degree: u8,
}

impl FieldElement {
    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn degree(self) -> u32 {
        self.degree as u32
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}@GF(2^{})", self.bits, self.degree)
    }
}

fn poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Exhaustive trial division by every polynomial of degree 1..=s/2.
pub fn is_irreducible(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let d = poly_degree(p);
    (2u64..1 << (d / 2 + 1)).all(|q| poly_rem(p, q) != 0)
}

static TABLE_CHECKED: [OnceLock<bool>; 33] = [const { OnceLock::new() }; 33];

impl FieldSpec {
    /// GF(2^degree) with the built-in modulus for that degree.
    pub fn with_degree(degree: u32) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::UnsupportedDegree(degree));
        }
        let modulus = MODULI[degree as usize];
        let ok = *TABLE_CHECKED[degree as usize].get_or_init(|| is_irreducible(modulus));
        if !ok {
            return Err(FieldError::Reducible { degree, modulus });
        }
        Ok(FieldSpec { degree, modulus })
    }

    /// GF(2^degree) with a caller-supplied modulus, checked for
    /// irreducibility.
    pub fn with_modulus(degree: u32, modulus: u64) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::UnsupportedDegree(degree));
        }
        if modulus >> degree != 1 || !is_irreducible(modulus) {
            return Err(FieldError::Reducible { degree, modulus });
        }
        Ok(FieldSpec { degree, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, `2^s`.
    pub fn order(&self) -> u64 {
        1u64 << self.degree
    }

    fn mask(&self) -> u32 {
        (self.order() - 1) as u32
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value >= self.order() {
            return Err(FieldError::ValueOutOfRange {
                value,
                degree: self.degree,
            });
        }
        Ok(self.wrap(value as u32))
    }

    pub(crate) fn wrap(&self, bits: u32) -> FieldElement {
        debug_assert_eq!(bits & !self.mask(), 0);
        FieldElement {
            bits,
            degree: self.degree as u8,
        }
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        self.wrap(rng.gen::<u32>() & self.mask())
    }

    fn check(&self, a: FieldElement) -> Result<(), FieldError> {
        if a.degree() != self.degree {
            return Err(FieldError::MixedFields(self.degree, a.degree()));
        }
        Ok(())
    }

    pub fn checked_add(
        &self,
        a: FieldElement,
        b: FieldElement,
    ) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(a.bits ^ b.bits))
    }

    pub fn checked_mul(
        &self,
        a: FieldElement,
        b: FieldElement,
    ) -> Result<FieldElement, FieldError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_bits(a.bits, b.bits)))
    }

    /// Panics on operands from another field; see [`FieldSpec::checked_add`].
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.checked_add(a, b).expect("field operands")
    }

    /// Panics on operands from another field; see [`FieldSpec::checked_mul`].
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.checked_mul(a, b).expect("field operands")
    }

    /// Additive inverse; every element is its own negation in characteristic 2.
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        a
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        self.check(a).expect("field operand");
        let mut base = a.bits;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_bits(acc, base);
            }
            base = self.mul_bits(base, base);
            e >>= 1;
        }
        self.wrap(acc)
    }

    /// `a^(2^s − 2)`, the multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (!a.is_zero()).then(|| self.pow(a, self.order() - 2))
    }

    /// Carry-less product reduced modulo the field polynomial.
    #[inline]
    pub(crate) fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a as u64, b);
        let mut prod = 0u64;
        while b != 0 {
            if b & 1 == 1 {
                prod ^= a;
            }
            a <<= 1;
            b >>= 1;
        }
        let s = self.degree;
        let mut bit = 2 * s - 2;
        while bit >= s {
            if prod >> bit & 1 == 1 {
                prod ^= self.modulus << (bit - s);
            }
            bit -= 1;
        }
        prod as u32
    }
}

/// `s = max(2, ⌈log₂(4k)⌉)`: the smallest supported field with at least
/// `4k` elements.
pub fn field_make(k: usize) -> Result<FieldSpec, FieldError> {
    assert!(k >= 1);
    let target = 4u128 * k as u128;
    let degree = (u128::BITS - (target - 1).leading_zeros()).max(MIN_DEGREE);
    if degree > MAX_DEGREE {
        return Err(FieldError::UnsupportedK(k));
    }
    FieldSpec::with_degree(degree)
}
