//! Stable 64-bit hashing for categorical features.
//!
//! FNV-1a with the standard offset basis `0xcbf29ce484222325` as the fixed
//! seed. Results do not depend on platform, process, or run.

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

pub fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(FNV_OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}

/// Hash folded into 20 bits so the value is exactly representable as `f64`
/// and never negative.
pub fn feature_hash(text: &str) -> f64 {
    (fnv1a(text.as_bytes()) & 0xF_FFFF) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_vectors() {
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a(b"a"), 0xaf63dc4c8601ec8c);
        assert_eq!(fnv1a(b"foobar"), 0x85944171f73967e8);
    }

    #[test]
    fn feature_hash_is_small_and_non_negative() {
        for s in ["", "=", "AclEntry", "public"] {
            let h = feature_hash(s);
            assert!((0.0..1_048_576.0).contains(&h));
        }
    }
}
