use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn exact_factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `C(n, k)` as an exact rational; zero outside `0 <= k <= n`.
pub fn exact_binomial(n: u64, k: i64) -> BigRational {
    if k < 0 || k as u64 > n {
        return BigRational::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(acc)
}

/// `C(n, k)` as an integer count.
pub fn binomial_u64(n: u64, k: u64) -> BigInt {
    exact_binomial(n, k as i64).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(exact_binomial(5, 2), int(10));
        assert_eq!(exact_binomial(9, 0), int(1));
        assert_eq!(exact_binomial(0, 0), int(1));
        assert_eq!(exact_binomial(6, 7), int(0));
        assert_eq!(exact_binomial(6, -1), int(0));
    }

    #[test]
    fn pascal_rule_exact() {
        for n in 1..40u64 {
            for k in 1..n as i64 {
                assert_eq!(
                    exact_binomial(n, k),
                    exact_binomial(n - 1, k) + exact_binomial(n - 1, k - 1)
                );
            }
        }
    }

    #[test]
    fn factorial_of_thirty() {
        assert_eq!(
            exact_factorial(30).to_string(),
            "265252859812191058636308480000000"
        );
    }
}
