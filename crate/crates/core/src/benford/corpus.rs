//! Exact decimal corpora for conformance checks, built with schoolbook
//! big-integer arithmetic so that no value passes through floating point.

const LIMB: u64 = 1_000_000_000;

/// Non-negative integer as little-endian base-1e9 limbs.
#[derive(Debug, Clone)]
struct Decimal {
    limbs: Vec<u64>,
}

impl Decimal {
    fn one() -> Self {
        Self { limbs: vec![1] }
    }

    fn mul_small(&mut self, m: u64) {
        let mut carry = 0;
        for limb in &mut self.limbs {
            let v = *limb * m + carry;
            *limb = v % LIMB;
            carry = v / LIMB;
        }
        while carry > 0 {
            self.limbs.push(carry % LIMB);
            carry /= LIMB;
        }
    }

    fn to_decimal_string(&self) -> String {
        let mut out = String::with_capacity(self.limbs.len() * 9);
        let mut iter = self.limbs.iter().rev();
        if let Some(top) = iter.next() {
            out.push_str(&top.to_string());
        }
        for limb in iter {
            out.push_str(&format!("{limb:09}"));
        }
        out
    }
}

/// `multiplier · radix^k` for `k = 0..count`, as exact decimal integers.
///
/// The multiplier must be below 2^32 and the radix below 2^31.
pub fn scaled_powers(radix: u32, count: usize, multiplier: u32) -> Vec<String> {
    let mut value = Decimal::one();
    value.mul_small(multiplier as u64);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(value.to_decimal_string());
        value.mul_small(radix as u64);
    }
    out
}

/// `2^k` for `k = 0..count`.
pub fn powers_of_two(count: usize) -> Vec<String> {
    scaled_powers(2, count, 1)
}
