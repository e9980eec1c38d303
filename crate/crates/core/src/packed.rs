//! Fast arithmetic on canonically encoded elements (`u64` values).
//!
//! The exhaustive oracles churn through tens of millions of field
//! operations; doing that on coefficient vectors would be painful, so
//! matrices and oracles work on packed values instead. Prime fields use
//! direct modular arithmetic; small extensions get log/antilog tables
//! built from the canonical primitive element; oversized extensions
//! fall back to per-operation polynomial arithmetic.

use crate::field::Field;
use crate::poly;

/// Largest field order that gets log/antilog tables (8 MiB at the cap).
const LOG_TABLE_MAX: u64 = 1 << 20;

pub(crate) enum PackedField {
    Prime {
        p: u64,
    },
    ExtLog {
        p: u64,
        m: u32,
        q: u64,
        /// exp[i] = value of g^i, i in 0..q-1
        exp: Vec<u32>,
        /// log[v] = i with g^i = v; log[0] unused
        log: Vec<u32>,
    },
    ExtPoly {
        p: u64,
        m: u32,
        q: u64,
        modulus: Vec<u64>,
    },
}

impl PackedField {
    pub fn build(field: &Field) -> PackedField {
        let p = field.characteristic();
        let m = field.degree();
        let q = field.order();
        if m == 1 {
            return PackedField::Prime { p };
        }
        if q <= LOG_TABLE_MAX {
            let g = field.primitive_element();
            let mut exp = vec![0u32; (q - 1) as usize];
            let mut log = vec![0u32; q as usize];
            let mut cur = field.one();
            for (i, slot) in exp.iter_mut().enumerate() {
                let v = cur.value();
                *slot = v as u32;
                log[v as usize] = i as u32;
                cur = cur.mul(&g).expect("same field");
            }
            debug_assert!(cur.is_one(), "g^(q-1) = 1");
            PackedField::ExtLog { p, m, q, exp, log }
        } else {
            PackedField::ExtPoly {
                p,
                m,
                q,
                modulus: field.modulus().expect("extension field").to_vec(),
            }
        }
    }

    pub fn q(&self) -> u64 {
        match self {
            PackedField::Prime { p } => *p,
            PackedField::ExtLog { q, .. } | PackedField::ExtPoly { q, .. } => *q,
        }
    }

    fn digits(&self, v: u64) -> Vec<u64> {
        let (p, m) = match self {
            PackedField::Prime { p } => (*p, 1),
            PackedField::ExtLog { p, m, .. } | PackedField::ExtPoly { p, m, .. } => (*p, *m),
        };
        let mut out = vec![0u64; m as usize];
        let mut v = v;
        for d in out.iter_mut() {
            *d = v % p;
            v /= p;
        }
        out
    }

    fn pack(&self, coeffs: &[u64]) -> u64 {
        let p = match self {
            PackedField::Prime { p } => *p,
            PackedField::ExtLog { p, .. } | PackedField::ExtPoly { p, .. } => *p,
        };
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            PackedField::Prime { p } => (a + b) % p,
            PackedField::ExtLog { p, m, .. } | PackedField::ExtPoly { p, m, .. } => {
                if *p == 2 {
                    return a ^ b;
                }
                digitwise(a, b, *p, *m, |x, y, p| (x + y) % p)
            }
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        match self {
            PackedField::Prime { p } => (a + p - b) % p,
            PackedField::ExtLog { p, m, .. } | PackedField::ExtPoly { p, m, .. } => {
                if *p == 2 {
                    return a ^ b;
                }
                digitwise(a, b, *p, *m, |x, y, p| (x + p - y) % p)
            }
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            PackedField::Prime { p } => a * b % p,
            PackedField::ExtLog { q, exp, log, .. } => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let idx = (log[a as usize] as u64 + log[b as usize] as u64) % (q - 1);
                exp[idx as usize] as u64
            }
            PackedField::ExtPoly { p, modulus, .. } => {
                if a == 0 || b == 0 {
                    return 0;
                }
                let prod = poly::mul_mod(&self.digits(a), &self.digits(b), modulus, *p);
                self.pack(&prod)
            }
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        match self {
            PackedField::Prime { p } => crate::numtheory::mod_inverse(a, *p),
            PackedField::ExtLog { q, exp, log, .. } => {
                let idx = ((q - 1) - log[a as usize] as u64) % (q - 1);
                Some(exp[idx as usize] as u64)
            }
            PackedField::ExtPoly { p, modulus, .. } => {
                let inv = poly::inverse_mod(&self.digits(a), modulus, *p)?;
                Some(self.pack(&inv))
            }
        }
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let PackedField::ExtLog { q, exp, log, .. } = self {
            let idx = (log[a as usize] as u128 * e as u128 % (*q - 1) as u128) as usize;
            return exp[idx] as u64;
        }
        let mut base = a;
        let mut e = e;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn digitwise(a: u64, b: u64, p: u64, m: u32, f: impl Fn(u64, u64, u64) -> u64) -> u64 {
    let mut a = a;
    let mut b = b;
    let mut out = 0u64;
    let mut place = 1u64;
    for _ in 0..m {
        out += f(a % p, b % p, p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}
