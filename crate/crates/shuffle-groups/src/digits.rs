//! The single base-ℓ digit bijection shared by the affine, product-action and
//! structure-identification code.
//!
//! A point `i ∈ [ℓ^m]` is identified with the tuple `(i_0, …, i_{m-1}) ∈ [ℓ]^m`
//! written *most significant digit first*: `i = Σ_{r=0}^{m-1} i_r · ℓ^{m-1-r}`.

/// Digits of `i` in base `ell`, most significant first, padded to length `m`.
pub fn to_digits(i: usize, ell: usize, m: usize) -> Vec<usize> {
    let mut digits = vec![0; m];
    let mut x = i;
    for r in (0..m).rev() {
        digits[r] = x % ell;
        x /= ell;
    }
    debug_assert_eq!(x, 0, "point out of range for [ell^m]");
    digits
}

/// Inverse of [`to_digits`].
pub fn from_digits(digits: &[usize], ell: usize) -> usize {
    digits.iter().fold(0, |acc, &d| {
        debug_assert!(d < ell);
        acc * ell + d
    })
}

/// `base^exp` with overflow checks (desk-scale degrees only).
pub fn pow(base: usize, exp: u32) -> usize {
    base.checked_pow(exp).expect("degree overflow")
}

/// Writes `k` as `ℓ^e` with `ℓ` minimal (not itself a proper power); returns
/// `(ℓ, e)`. For `k ≤ 1` returns `(k, 1)`.
pub fn primitive_base(k: usize) -> (usize, u32) {
    if k <= 1 {
        return (k, 1);
    }
    // The exponent e is at most log2(k); try the largest exponent first so
    // that the returned base is minimal.
    let max_e = (usize::BITS - k.leading_zeros()) as u32;
    for e in (2..=max_e).rev() {
        // Integer e-th root candidate.
        let root = (k as f64).powf(1.0 / e as f64).round() as usize;
        for cand in root.saturating_sub(1)..=root + 1 {
            if cand >= 2 && cand.checked_pow(e) == Some(k) {
                return (cand, e);
            }
        }
    }
    (k, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_round_trip() {
        for i in 0..27 {
            let d = to_digits(i, 3, 3);
            assert_eq!(from_digits(&d, 3), i);
        }
        // Most significant digit first: 11 = 1·9 + 0·3 + 2.
        assert_eq!(to_digits(11, 3, 3), vec![1, 0, 2]);
    }

    #[test]
    fn primitive_bases() {
        assert_eq!(primitive_base(2), (2, 1));
        assert_eq!(primitive_base(4), (2, 2));
        assert_eq!(primitive_base(8), (2, 3));
        assert_eq!(primitive_base(9), (3, 2));
        assert_eq!(primitive_base(6), (6, 1));
        assert_eq!(primitive_base(64), (2, 6));
        assert_eq!(primitive_base(729), (3, 6));
        assert_eq!(primitive_base(36), (6, 2));
    }
}
