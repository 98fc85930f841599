//! The four replication formulas, one per residue of the index mod 4.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Read access to `C(g, .)` and `C(g^2, .)` below the index being computed.
struct Rows<'a> {
    g: &'a [BigInt],
    g2: &'a [BigInt],
    n: usize,
}

impl Rows<'_> {
    fn c(&self, i: usize) -> &BigInt {
        assert!(i >= 1 && i < self.n, "C(g,{i}) referenced while computing C(g,{})", self.n);
        &self.g[i]
    }

    fn d(&self, i: usize) -> &BigInt {
        assert!(i >= 1 && i < self.n, "C(g^2,{i}) referenced while computing C(g,{})", self.n);
        &self.g2[i]
    }

    /// `(C(g,i)^2 - C(g^2,i)) / 2`, or `+` when `plus` is set.
    fn half(&self, i: usize, plus: bool) -> Result<BigInt, BigInt> {
        let sq = self.c(i) * self.c(i);
        let num = if plus { sq + self.d(i) } else { sq - self.d(i) };
        let (q, r) = num.div_rem(&BigInt::from(2));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(num)
        }
    }

    fn signed(i: usize) -> i32 {
        if i.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `C(g, n)` from `C(g, i)` and `C(g^2, i)` for `1 <= i < n`.
///
/// `g` and `g2` are indexed by `i` directly (entry 0 is unused). Defined
/// for `n = 4` and `n >= 6`; `C(g, 5)` is not determined by lower terms.
/// An odd numerator in one of the halvings is returned as the error.
pub fn replicate_step(g: &[BigInt], g2: &[BigInt], n: usize) -> Result<BigInt, BigInt> {
    assert!(n == 4 || n >= 6, "C(g,{n}) is a seed");
    let r = Rows { g, g2, n };
    let j = n / 4;
    let mut out = BigInt::zero();
    match n % 4 {
        0 => {
            out += r.c(2 * j + 1);
            out += r.half(j, false)?;
            for i in 1..j {
                out += r.c(i) * r.c(2 * j - i);
            }
        }
        1 => {
            out += r.c(2 * j + 3);
            out -= r.c(2) * r.c(2 * j);
            out += r.half(2 * j, true)?;
            out += r.half(j + 1, false)?;
            for i in 1..=j {
                out += r.c(i) * r.c(2 * j - i + 2);
            }
            for i in 1..j {
                out += r.d(i) * r.c(4 * j - 4 * i);
            }
            for i in 1..2 * j {
                out += Rows::signed(i) * (r.c(i) * r.c(4 * j - i));
            }
        }
        2 => {
            out += r.c(2 * j + 2);
            for i in 1..=j {
                out += r.c(i) * r.c(2 * j - i + 1);
            }
        }
        _ => {
            out += r.c(2 * j + 4);
            out -= r.c(2) * r.c(2 * j + 1);
            out -= r.half(2 * j + 1, false)?;
            for i in 1..=j + 1 {
                out += r.c(i) * r.c(2 * j - i + 3);
            }
            for i in 1..=j {
                out += r.d(i) * r.c(4 * j - 4 * i + 2);
            }
            for i in 1..=2 * j {
                out += Rows::signed(i) * (r.c(i) * r.c(4 * j - i + 2));
            }
        }
    }
    Ok(out)
}
