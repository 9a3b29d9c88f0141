//! Parsers for complex numbers, parameter vectors and scan ranges.

use anyhow::{anyhow, bail, Result};
use num_complex::Complex64;

/// `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || anyhow!("cannot parse complex number `{s}` (expected a+bi)");
    if t.is_empty() {
        return Err(err());
    }
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return Ok(Complex64::new(t.parse().map_err(|_| err())?, 0.0));
    };
    // split at the last sign that is not an exponent sign or the leading char
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_part, im_part) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im: f64 = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().map_err(|_| err())?,
    };
    let re: f64 = re_part.parse().map_err(|_| err())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(err());
    }
    Ok(Complex64::new(re, im))
}

/// Comma-separated values; a single value is broadcast to all `d` slots.
pub fn parse_alpha(s: &str, d: usize) -> Result<Vec<String>> {
    let parts: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
    if parts.iter().any(|p| p.is_empty()) {
        bail!("empty entry in alpha list `{s}`");
    }
    match parts.len() {
        1 => Ok(vec![parts[0].clone(); d]),
        n if n == d => Ok(parts),
        n => bail!("alpha has {n} entries but d = {d}"),
    }
}

pub fn alpha_values(raw: &[String]) -> Result<Vec<f64>> {
    raw.iter()
        .map(|p| p.parse::<f64>().map_err(|_| anyhow!("invalid alpha value `{p}`")))
        .collect()
}

pub fn parse_orders(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| anyhow!("invalid order `{p}`")))
        .collect()
}

/// `lo:hi:steps`, evenly spaced and inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Range {
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, steps] = parts.as_slice() else {
            bail!("range `{s}` must look like lo:hi:steps");
        };
        let lo: f64 = lo.trim().parse().map_err(|_| anyhow!("invalid range start `{lo}`"))?;
        let hi: f64 = hi.trim().parse().map_err(|_| anyhow!("invalid range end `{hi}`"))?;
        let steps: usize = steps.trim().parse().map_err(|_| anyhow!("invalid step count `{steps}`"))?;
        if steps == 0 || !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
            bail!("range `{s}` is empty");
        }
        if steps == 1 && lo != hi {
            bail!("a single step needs lo == hi");
        }
        Ok(Range { lo, hi, steps })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        let span = self.hi - self.lo;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| if i + 1 == self.steps { self.hi } else { self.lo + span * i as f64 / last })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("1+0i").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("0.5-0.25i").unwrap(), Complex64::new(0.5, -0.25));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("0.999i").unwrap(), Complex64::new(0.0, 0.999));
        assert_eq!(parse_complex("1e-3+2e-1i").unwrap(), Complex64::new(1e-3, 0.2));
        assert_eq!(parse_complex("-0.3").unwrap(), Complex64::new(-0.3, 0.0));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn alpha_broadcast() {
        assert_eq!(parse_alpha("0.5", 3).unwrap(), vec!["0.5"; 3]);
        assert_eq!(parse_alpha("0.1, 0.2", 2).unwrap(), vec!["0.1", "0.2"]);
        assert!(parse_alpha("0.1,0.2", 3).is_err());
    }

    #[test]
    fn ranges() {
        let r = Range::parse("0.3:0.7:41").unwrap();
        let v = r.values();
        assert_eq!(v.len(), 41);
        assert_eq!(v[0], 0.3);
        assert_eq!(v[40], 0.7);
        assert!((v[17] - 0.47).abs() < 1e-12);
        assert!(Range::parse("1:0:5").is_err());
        assert!(Range::parse("0:1:0").is_err());
        assert!(Range::parse("0:1").is_err());
    }
}
