//! Truncated integer power series for Hilbert-series bookkeeping.

/// Coefficients `s[0], s[1], …` of a power series truncated to a fixed length.
pub type Series = Vec<i64>;

pub fn from_dims(dims: &[usize]) -> Series {
    dims.iter().map(|&d| d as i64).collect()
}

pub fn mul(a: &[i64], b: &[i64]) -> Series {
    let n = a.len().min(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// `a / b` for `b[0] = 1`, truncated to the length of `a`.
pub fn div(a: &[i64], b: &[i64]) -> Series {
    assert_eq!(b.first(), Some(&1), "divisor must have constant term 1");
    let n = a.len();
    let mut out = vec![0; n];
    for k in 0..n {
        let mut c = a[k];
        for j in 1..=k.min(b.len().saturating_sub(1)) {
            c -= b[j] * out[k - j];
        }
        out[k] = c;
    }
    out
}

/// `∏ (1 - t^{d_i})` truncated to `len` terms.
pub fn one_minus_powers(degrees: &[u32], len: usize) -> Series {
    let mut out = vec![0; len];
    if len > 0 {
        out[0] = 1;
    }
    for &d in degrees {
        let f: Series = (0..len)
            .map(|k| {
                if k == 0 {
                    1
                } else if k == d as usize {
                    -1
                } else {
                    0
                }
            })
            .collect();
        out = mul(&out, &f);
    }
    out
}

/// Degree of the last nonzero coefficient.
pub fn degree(s: &[i64]) -> Option<usize> {
    s.iter().rposition(|&c| c != 0)
}

/// Sum of the coefficients.
pub fn eval_at_one(s: &[i64]) -> i64 {
    s.iter().sum()
}

/// Text such as `1 + 2*t + 2*t^2`; coefficients beyond the last nonzero one are omitted.
pub fn format(s: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in s.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        let mag = c.unsigned_abs();
        let body = match (mag, mono.is_empty()) {
            (_, true) => mag.to_string(),
            (1, false) => mono,
            (_, false) => format!("{mag}*{mono}"),
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_geometric_series() {
        // 1/(1-t)^2 divided by 1/((1-t^2)(1-t^4)) is (1+t)(1+t+t^2+t^3).
        let n = 13;
        let a = div(
            &{
                let mut v = vec![0; n];
                v[0] = 1;
                v
            },
            &one_minus_powers(&[1, 1], n),
        );
        let r = div(
            &{
                let mut v = vec![0; n];
                v[0] = 1;
                v
            },
            &one_minus_powers(&[2, 4], n),
        );
        let xi = div(&a, &r);
        assert_eq!(&xi[..6], &[1, 2, 2, 2, 1, 0]);
        assert_eq!(degree(&xi), Some(4));
        assert_eq!(eval_at_one(&xi), 8);
        assert_eq!(format(&xi), "1 + 2*t + 2*t^2 + 2*t^3 + t^4");
        assert_eq!(format(&[0, -1, 3]), "-t + 3*t^2");
    }
}
