//! Index <-> vector bijections used by every exhaustive scan.
//!
//! Index `t` in `0..p^n` encodes the vector whose base-p digits are the
//! coordinates, coordinate 0 most significant. Ascending index order is
//! therefore lexicographic coordinate order.

/// Writes the vector with index `t` into `out`.
#[inline]
pub fn decode(mut t: u64, p: u32, out: &mut [u32]) {
    let p = p as u64;
    for slot in out.iter_mut().rev() {
        *slot = (t % p) as u32;
        t /= p;
    }
}

pub fn decode_vec(t: u64, p: u32, n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    decode(t, p, &mut v);
    v
}

pub fn encode(v: &[u32], p: u32) -> u64 {
    v.iter().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
}

/// First nonzero coordinate is 1: one representative per nonzero line.
#[inline]
pub fn is_projective_rep(v: &[u32]) -> bool {
    v.iter().find(|&&c| c != 0) == Some(&1)
}
