//! Exact integer roots. Bound formulas go through these instead of `f64`
//! so that ceilings at perfect powers come out right.

/// Largest `r` with `r^k <= n`.
pub fn iroot_floor(n: u128, k: u32) -> u128 {
    assert!(k >= 1, "root index must be positive");
    if n < 2 || k == 1 {
        return n;
    }
    // r^k <= n < 2^128 implies r < 2^(128/k + 1)
    let mut lo: u128 = 0;
    let mut hi: u128 = 1u128 << (128 / k + 1).min(127);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if pow_le(mid, k, n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Smallest `r` with `r^k >= n`.
pub fn iroot_ceil(n: u128, k: u32) -> u128 {
    let r = iroot_floor(n, k);
    if pow_le(r, k, n) && r.checked_pow(k) == Some(n) {
        r
    } else {
        r + 1
    }
}

fn pow_le(base: u128, k: u32, n: u128) -> bool {
    matches!(base.checked_pow(k), Some(p) if p <= n)
}
