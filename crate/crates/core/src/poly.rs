//! Polynomial arithmetic over GF(p) on raw coefficient slices,
//! low-degree-first. Internal support for extension-field arithmetic.

/// Trim trailing zero coefficients (the zero polynomial becomes empty).
pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + y) % p;
    }
    trim(out)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let idx = i + j;
            out[idx] = (out[idx] + x * y) % p;
        }
    }
    trim(out)
}

/// Division with remainder; `den` must be nonzero.
pub(crate) fn divmod(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = degree(den).expect("division by zero polynomial");
    let lead_inv = crate::numtheory::mod_inverse(den[dd], p).expect("p prime");
    let mut rem: Vec<u64> = num.to_vec();
    rem = trim(rem);
    let mut quot = vec![0u64; num.len().saturating_sub(dd)];
    while let Some(dn) = degree(&rem) {
        if dn < dd {
            break;
        }
        let shift = dn - dd;
        let factor = rem[dn] * lead_inv % p;
        quot[shift] = factor;
        for (k, &c) in den.iter().enumerate() {
            if c != 0 {
                let idx = shift + k;
                rem[idx] = (rem[idx] + p - factor * c % p) % p;
            }
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    divmod(num, den, p).1
}

/// Multiplication followed by reduction modulo `modulus`.
pub(crate) fn mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), modulus, p)
}

/// Inverse of `a` modulo `modulus` via the extended Euclidean algorithm.
/// Returns None when `a` is zero or shares a factor with the modulus.
pub(crate) fn inverse_mod(a: &[u64], modulus: &[u64], p: u64) -> Option<Vec<u64>> {
    let (mut r0, mut r1) = (modulus.to_vec(), trim(a.to_vec()));
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1, p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    // gcd must be a nonzero constant
    match degree(&r0) {
        Some(0) => {
            let c_inv = crate::numtheory::mod_inverse(r0[0], p)?;
            Some(trim(
                t0.iter().map(|&c| c * c_inv % p).collect::<Vec<_>>(),
            ))
        }
        _ => None,
    }
}

/// Is the monic polynomial `f` irreducible over GF(p)?  Trial division
/// by every monic polynomial of degree 1..=deg(f)/2.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for dd in 1..=d / 2 {
        // enumerate monic divisors of degree dd
        let count = p.pow(dd as u32);
        let mut g = vec![0u64; dd + 1];
        g[dd] = 1;
        for v in 0..count {
            let mut x = v;
            for c in g.iter_mut().take(dd) {
                *c = x % p;
                x /= p;
            }
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divmod_reconstructs() {
        let p = 7;
        let a = vec![3, 1, 0, 5, 2]; // 2x^4+5x^3+x+3
        let b = vec![4, 1, 1]; // x^2+x+4
        let (q, r) = divmod(&a, &b, p);
        let back = add(&mul(&q, &b, p), &r, p);
        assert_eq!(back, trim(a));
        assert!(degree(&r).map_or(true, |dr| dr < 2));
    }

    #[test]
    fn gf2_quartics() {
        // the three irreducible quartics over GF(2)
        let irr: Vec<Vec<u64>> = (0..16u64)
            .map(|v| {
                let mut f = vec![0u64; 5];
                let mut x = v;
                for c in f.iter_mut().take(4) {
                    *c = x % 2;
                    x /= 2;
                }
                f[4] = 1;
                f
            })
            .filter(|f| is_irreducible(f, 2))
            .collect();
        assert_eq!(
            irr,
            vec![
                vec![1, 1, 0, 0, 1], // x^4+x+1
                vec![1, 0, 0, 1, 1], // x^4+x^3+1
                vec![1, 1, 1, 1, 1], // x^4+x^3+x^2+x+1
            ]
        );
    }

    #[test]
    fn inverse_in_gf8() {
        let p = 2;
        let modulus = vec![1, 1, 0, 1]; // x^3+x+1, irreducible over GF(2)
        for v in 1..8u64 {
            let a = vec![v & 1, (v >> 1) & 1, (v >> 2) & 1];
            let inv = inverse_mod(&a, &modulus, p).unwrap();
            assert_eq!(mul_mod(&a, &inv, &modulus, p), vec![1]);
        }
    }
}
