//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! A [`Field`] is a cheap-to-clone handle on an immutable field
//! description: characteristic `p`, extension degree `m`, and (for
//! `m > 1`) a monic irreducible modulus polynomial over GF(p). The
//! modulus is not configurable: it is always the lexicographically
//! smallest monic irreducible of degree `m`, comparing coefficient
//! vectors constant-term first, so every construction downstream is
//! reproducible from `(p, m)` alone.
//!
//! Elements are coefficient vectors in the polynomial basis. Each
//! element also has a canonical integer encoding
//! `value = c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, which doubles as the
//! canonical ordering ("smallest" always means smallest value; for
//! prime fields this is residue order).

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::numtheory::{self, distinct_prime_factors, is_prime};
use crate::packed::PackedField;
use crate::poly;

/// Default cap on the field order; all desk-scale constructions fit.
pub const DEFAULT_SIZE_BOUND: u64 = 1 << 32;

/// Immutable description of a finite field GF(p^m).
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Monic irreducible of degree m, low-degree-first; None iff m == 1.
    modulus: Option<Vec<u64>>,
    packed: OnceLock<PackedField>,
    primitive: OnceLock<u64>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "GF({})", self.p),
            Some(md) => write!(
                f,
                "GF({}^{}; modulus={})",
                self.p,
                self.m,
                poly_to_string(md)
            ),
        }
    }
}

/// A finite field handle. Clones share one immutable [`FieldSpec`];
/// all operations are pure, so fields are safe to share across threads.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Field {
    /// Builds GF(p^m) with the default size bound.
    ///
    /// Errors with [`Error::NotPrime`] for composite `p` and
    /// [`Error::SizeExceeded`] when p^m is over the bound.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        Self::with_size_bound(p, m, DEFAULT_SIZE_BOUND)
    }

    /// Like [`Field::new`] with an explicit cap on the field order.
    pub fn with_size_bound(p: u64, m: u32, bound: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::InvalidFieldSpec(format!(
                "GF({p}^{m}): extension degree must be at least 1"
            )));
        }
        let q_wide = (p as u128).pow(m);
        if q_wide > bound as u128 {
            return Err(Error::SizeExceeded {
                q: q_wide,
                bound,
            });
        }
        let q = q_wide as u64;
        let modulus = if m == 1 {
            None
        } else {
            Some(smallest_irreducible(p, m))
        };
        Ok(Field(Arc::new(FieldSpec {
            p,
            m,
            q,
            modulus,
            packed: OnceLock::new(),
            primitive: OnceLock::new(),
        })))
    }

    /// Parses a field specification: `GF(17)`, `GF(2^4)`, `GF(16)`
    /// (prime powers resolve to their canonical extension), `Z_17`, or
    /// the full canonical form `GF(2^4; modulus=1+x^3+x^4)`.
    pub fn parse(text: &str) -> Result<Field> {
        let bad = || Error::InvalidFieldSpec(text.to_string());
        let s = text.trim();
        let (body, modulus_text) = if let Some(rest) = s.strip_prefix("GF(") {
            let inner = rest.strip_suffix(')').ok_or_else(bad)?;
            match inner.split_once(';') {
                Some((b, md)) => {
                    let md = md.trim().strip_prefix("modulus=").ok_or_else(bad)?;
                    (b.trim().to_string(), Some(md.trim().to_string()))
                }
                None => (inner.trim().to_string(), None),
            }
        } else if let Some(rest) = s.strip_prefix("Z_") {
            (rest.trim().to_string(), None)
        } else {
            return Err(bad());
        };

        let (p, m) = match body.split_once('^') {
            Some((pt, mt)) => (
                pt.trim().parse::<u64>().map_err(|_| bad())?,
                mt.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => {
                let q: u64 = body.trim().parse().map_err(|_| bad())?;
                if is_prime(q) {
                    (q, 1)
                } else if let Some((p, m)) = numtheory::is_prime_power(q) {
                    (p, m)
                } else {
                    return Err(Error::NotPrime(q));
                }
            }
        };
        let field = Field::new(p, m)?;
        if let Some(md) = modulus_text {
            let parsed = parse_poly(&md, p).ok_or_else(bad)?;
            if field.modulus() != Some(parsed.as_slice()) {
                return Err(Error::InvalidFieldSpec(format!(
                    "{text}: modulus differs from the canonical choice {}",
                    poly_to_string(field.modulus().unwrap_or(&[]))
                )));
            }
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// The field order q = p^m.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// The modulus polynomial (low-degree-first), present iff m > 1.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.m as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.0.m as usize];
        coeffs[0] = 1;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The element with canonical encoding `value` (must be `< q`).
    pub fn element_from_value(&self, value: u64) -> Result<FieldElement> {
        if value >= self.0.q {
            return Err(Error::ValueOutOfRange {
                value,
                q: self.0.q,
            });
        }
        let mut coeffs = vec![0u64; self.0.m as usize];
        let mut v = value;
        for c in coeffs.iter_mut() {
            *c = v % self.0.p;
            v /= self.0.p;
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs,
        })
    }

    /// Builds an element from polynomial-basis coefficients
    /// (low-degree-first, at most m of them; reduced mod p here).
    pub fn element_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.m as usize {
            return Err(Error::LengthMismatch {
                expected: self.0.m as usize,
                got: coeffs.len(),
            });
        }
        let mut full = vec![0u64; self.0.m as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            full[i] = c % self.0.p;
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: full,
        })
    }

    /// Embeds an integer residue as a constant (reduces mod p).
    pub fn residue(&self, x: u64) -> FieldElement {
        let mut coeffs = vec![0u64; self.0.m as usize];
        coeffs[0] = x % self.0.p;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// All q elements in canonical (value) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| self.element_from_value(v).expect("in range"))
    }

    /// The canonically smallest primitive element (generator of the
    /// multiplicative group), found by scanning in value order.
    pub fn primitive_element(&self) -> FieldElement {
        let v = *self.0.primitive.get_or_init(|| {
            let target = self.0.q - 1;
            for cand in self.elements().skip(1) {
                if cand.order().expect("nonzero") == target {
                    return cand.value();
                }
            }
            unreachable!("every finite field has a primitive element")
        });
        self.element_from_value(v).expect("cached value in range")
    }

    /// The canonically smallest element of multiplicative order exactly
    /// `n`. Exists iff `n` divides q-1; errors with
    /// [`Error::NoSuchRoot`] otherwise.
    ///
    /// Every order-n element is a power g^(j(q-1)/n) of a primitive g
    /// with gcd(j, n) = 1, so the scan is over those phi(n) candidates.
    pub fn find_primitive_root_of_unity(&self, n: u64) -> Result<FieldElement> {
        let q = self.0.q;
        if n == 0 || (q - 1) % n != 0 {
            return Err(Error::NoSuchRoot { q, n });
        }
        if n == 1 {
            return Ok(self.one());
        }
        let g = self.primitive_element();
        let step = (q - 1) / n;
        let mut best: Option<FieldElement> = None;
        for j in 1..=n {
            if num_integer::gcd(j, n) != 1 {
                continue;
            }
            let cand = g.pow(j * step);
            if best.as_ref().map_or(true, |b| cand.value() < b.value()) {
                best = Some(cand);
            }
        }
        let root = best.expect("phi(n) >= 1");
        debug_assert_eq!(root.order(), Ok(n));
        Ok(root)
    }

    pub(crate) fn packed(&self) -> &PackedField {
        self.0.packed.get_or_init(|| PackedField::build(self))
    }

    pub(crate) fn element_from_packed(&self, value: u64) -> FieldElement {
        self.element_from_value(value).expect("packed value in range")
    }
}

/// An element of a specific [`Field`]. Elements from different fields
/// never compare equal and refuse to mix in arithmetic.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "{}", poly_to_string(&self.coeffs))
        }
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Polynomial-basis coefficients, low-degree-first, length m.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Canonical integer encoding `sum c_i p^i`.
    pub fn value(&self) -> u64 {
        let p = self.field.characteristic();
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, rhs: &FieldElement) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn from_poly(field: &Field, poly: Vec<u64>) -> FieldElement {
        let mut coeffs = poly;
        coeffs.resize(field.degree() as usize, 0);
        FieldElement {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        let p = self.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        let p = self.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.field.characteristic();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(rhs)?;
        let p = self.field.characteristic();
        if self.field.degree() == 1 {
            let prod = self.coeffs[0] * rhs.coeffs[0] % p;
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![prod],
            });
        }
        let modulus = self.field.modulus().expect("extension field");
        let prod = poly::mul_mod(&self.coeffs, &rhs.coeffs, modulus, p);
        Ok(FieldElement::from_poly(&self.field, prod))
    }

    /// Multiplicative inverse; [`Error::DivisionByZero`] on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.characteristic();
        if self.field.degree() == 1 {
            let inv = numtheory::mod_inverse(self.coeffs[0], p).expect("p prime, a nonzero");
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![inv],
            });
        }
        let modulus = self.field.modulus().expect("extension field");
        let inv = poly::inverse_mod(&self.coeffs, modulus, p)
            .expect("modulus irreducible, element nonzero");
        Ok(FieldElement::from_poly(&self.field, inv))
    }

    /// a^e by square-and-multiply; a^0 = 1 by convention, also for a = 0.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Componentwise conjugation exponent: a^l. Used by the Hermitian
    /// inner product, where l is a power of the characteristic and the
    /// map is a field automorphism.
    pub fn frobenius_power(&self, l: u64) -> FieldElement {
        self.pow(l)
    }

    /// Multiplicative order; [`Error::ZeroElement`] on zero.
    ///
    /// Starts at q-1 and descends through its prime factors.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut order = self.field.order() - 1;
        for p in distinct_prime_factors(order) {
            while order % p == 0 && self.pow(order / p).is_one() {
                order /= p;
            }
        }
        Ok(order)
    }
}

/// Lexicographically smallest (constant term first) monic irreducible
/// of degree m over GF(p).
fn smallest_irreducible(p: u64, m: u32) -> Vec<u64> {
    let m = m as usize;
    let count = (p as u128).pow(m as u32);
    let mut f = vec![0u64; m + 1];
    f[m] = 1;
    let mut v: u128 = 0;
    while v < count {
        // v encodes (c_0, ..., c_{m-1}) with c_0 most significant,
        // so ascending v is ascending low-degree-first lex order.
        let mut x = v;
        for i in (0..m).rev() {
            f[i] = (x % p as u128) as u64;
            x /= p as u128;
        }
        if poly::is_irreducible(&f, p) {
            return f;
        }
        v += 1;
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

/// Renders a coefficient vector (low-degree-first) like `1+2*x+x^3`.
pub(crate) fn poly_to_string(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let t = match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Parses the output format of [`poly_to_string`]; coefficients are
/// reduced mod p.
pub(crate) fn parse_poly(text: &str, p: u64) -> Option<Vec<u64>> {
    let mut coeffs: Vec<u64> = Vec::new();
    let text = text.trim();
    if text == "0" {
        return Some(coeffs);
    }
    for term in text.split('+') {
        let term = term.trim();
        let (coef, deg) = match term.split_once("x^") {
            Some((c, d)) => {
                let c = c.trim().trim_end_matches('*').trim();
                let coef = if c.is_empty() { 1 } else { c.parse().ok()? };
                (coef, d.trim().parse::<usize>().ok()?)
            }
            None => match term.split_once('x') {
                Some((c, rest)) => {
                    if !rest.trim().is_empty() {
                        return None;
                    }
                    let c = c.trim().trim_end_matches('*').trim();
                    let coef = if c.is_empty() { 1 } else { c.parse().ok()? };
                    (coef, 1)
                }
                None => (term.parse::<u64>().ok()?, 0),
            },
        };
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] = (coeffs[deg] + coef) % p;
    }
    Some(poly::trim(coeffs))
}

impl serde::Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Field::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn create_prime_field() {
        let f = Field::new(17, 1).unwrap();
        assert_eq!(f.order(), 17);
        assert_eq!(f.modulus(), None);
        assert_eq!(f.to_string(), "GF(17)");
    }

    #[test]
    fn create_rejects_composite_characteristic() {
        assert_eq!(Field::new(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn create_respects_size_bound() {
        assert!(matches!(
            Field::with_size_bound(2, 20, 1 << 16),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn gf16_modulus_matches_independent_enumeration() {
        // Oracle: enumerate all monic quartics over GF(2) in
        // low-degree-first lex order and keep those with no monic
        // divisor of degree 1 or 2, found by brute-force products.
        let all_products: Vec<Vec<u64>> = {
            let mut prods = Vec::new();
            for dg in 1..=2usize {
                let dh = 4 - dg;
                for vg in 0..2u64.pow(dg as u32) {
                    for vh in 0..2u64.pow(dh as u32) {
                        let digits = |v: u64, d: usize| -> Vec<u64> {
                            let mut f: Vec<u64> =
                                (0..d).map(|i| (v >> i) & 1).collect();
                            f.push(1);
                            f
                        };
                        prods.push(poly::mul(&digits(vg, dg), &digits(vh, dh), 2));
                    }
                }
            }
            prods
        };
        let mut first_irreducible = None;
        'outer: for v in 0..16u64 {
            // c_0 most significant: lex order, constant term first
            let mut f = vec![0u64; 5];
            f[4] = 1;
            let mut x = v;
            for i in (0..4).rev() {
                f[i] = x % 2;
                x /= 2;
            }
            for prod in &all_products {
                if *prod == f {
                    continue 'outer;
                }
            }
            first_irreducible = Some(f);
            break;
        }
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.modulus().unwrap(), first_irreducible.unwrap().as_slice());
        // for the record: x^4+x^3+1
        assert_eq!(f.modulus().unwrap(), &[1, 0, 0, 1, 1]);
    }

    #[test]
    fn gf17_inverse_of_three() {
        let f = Field::new(17, 1).unwrap();
        let three = f.residue(3);
        let six = f.residue(6);
        assert!(three.mul(&six).unwrap().is_one());
        assert_eq!(three.inv().unwrap(), six);
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = Field::new(17, 1).unwrap();
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        let g = Field::new(2, 4).unwrap();
        assert_eq!(g.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixing_fields_fails() {
        let f = Field::new(17, 1).unwrap();
        let g = Field::new(13, 1).unwrap();
        assert_eq!(f.one().add(&g.one()), Err(Error::FieldMismatch));
        assert_eq!(f.one().mul(&g.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn every_nonzero_gf16_element_inverts() {
        let f = Field::new(2, 4).unwrap();
        for a in f.elements().skip(1) {
            assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            assert!(a.pow(15).is_one(), "a^(q-1) = 1");
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (p, m) in [(2, 4), (3, 3), (5, 2), (7, 2), (17, 1)] {
            let f = Field::new(p, m).unwrap();
            let elems: Vec<FieldElement> = f.elements().collect();
            for a in &elems {
                for b in &elems {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &elems {
                        let ab_c = a.add(b).unwrap().add(c).unwrap();
                        let a_bc = a.add(&b.add(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                        let mul_assoc_l = a.mul(b).unwrap().mul(c).unwrap();
                        let mul_assoc_r = a.mul(&b.mul(c).unwrap()).unwrap();
                        assert_eq!(mul_assoc_l, mul_assoc_r);
                        let distl = a.mul(&b.add(c).unwrap()).unwrap();
                        let distr = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(distl, distr);
                    }
                }
            }
        }
    }

    #[test]
    fn element_orders() {
        let f17 = Field::new(17, 1).unwrap();
        assert_eq!(f17.one().order(), Ok(1));
        assert_eq!(f17.residue(3).order(), Ok(16));
        let f41 = Field::new(41, 1).unwrap();
        assert_eq!(f41.residue(7).order(), Ok(40));
        assert_eq!(f17.zero().order(), Err(Error::ZeroElement));
    }

    #[test]
    fn order_divides_group_order() {
        for (p, m) in [(2, 4), (3, 2), (13, 1)] {
            let f = Field::new(p, m).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!((f.order() - 1) % a.order().unwrap(), 0);
            }
        }
    }

    #[test]
    fn primitive_roots_of_unity() {
        let f17 = Field::new(17, 1).unwrap();
        let w = f17.find_primitive_root_of_unity(16).unwrap();
        assert_eq!(w.value(), 3);

        let f61 = Field::new(61, 1).unwrap();
        assert_eq!(f61.find_primitive_root_of_unity(60).unwrap().value(), 2);

        let f11 = Field::new(11, 1).unwrap();
        assert_eq!(f11.find_primitive_root_of_unity(10).unwrap().value(), 2);

        let f13 = Field::new(13, 1).unwrap();
        assert_eq!(
            f13.find_primitive_root_of_unity(5),
            Err(Error::NoSuchRoot { q: 13, n: 5 })
        );
    }

    #[test]
    fn root_has_exact_order() {
        for (p, m, n) in [(17, 1, 16u64), (11, 1, 10), (2, 4, 15), (3, 2, 8), (13, 1, 12)] {
            let f = Field::new(p, m).unwrap();
            let w = f.find_primitive_root_of_unity(n).unwrap();
            assert!(w.pow(n).is_one());
            for r in 1..n {
                assert!(!w.pow(r).is_one(), "omega^{r} must not be 1");
            }
        }
    }

    #[test]
    fn frobenius_is_involution_on_gf4() {
        let f = Field::new(2, 2).unwrap();
        for a in f.elements() {
            assert_eq!(a.frobenius_power(2).frobenius_power(2), a);
        }
        assert!(f.zero().frobenius_power(2).is_zero());
    }

    #[test]
    fn frobenius_on_gf9_fixes_exactly_gf3() {
        let f = Field::new(3, 2).unwrap();
        let mut fixed = Vec::new();
        for a in f.elements() {
            // automorphism laws
            for b in f.elements() {
                assert_eq!(
                    a.add(&b).unwrap().frobenius_power(3),
                    a.frobenius_power(3).add(&b.frobenius_power(3)).unwrap()
                );
                assert_eq!(
                    a.mul(&b).unwrap().frobenius_power(3),
                    a.frobenius_power(3).mul(&b.frobenius_power(3)).unwrap()
                );
            }
            if a.frobenius_power(3) == a {
                fixed.push(a.value());
            }
        }
        fixed.sort_unstable();
        assert_eq!(fixed, vec![0, 1, 2], "fixed field is the prime subfield");
    }

    #[test]
    fn parse_field_specs() {
        assert_eq!(Field::parse("GF(17)").unwrap().order(), 17);
        assert_eq!(Field::parse("Z_17").unwrap().order(), 17);
        assert_eq!(Field::parse("GF(16)").unwrap().order(), 16);
        assert_eq!(Field::parse("GF(2^4)").unwrap().order(), 16);
        assert_eq!(Field::parse("GF(5^8)").unwrap().order(), 390625);
        assert_eq!(Field::parse("GF(12)"), Err(Error::NotPrime(12)));
        assert!(Field::parse("nonsense").is_err());
        // canonical round trip
        let f = Field::new(2, 4).unwrap();
        assert_eq!(Field::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn value_roundtrip_and_ordering() {
        let f = Field::new(3, 2).unwrap();
        let values: Vec<u64> = f.elements().map(|e| e.value()).collect();
        assert_eq!(values, (0..9).collect::<Vec<_>>());
        for v in 0..9 {
            assert_eq!(f.element_from_value(v).unwrap().value(), v);
        }
        assert!(f.element_from_value(9).is_err());
    }
}
