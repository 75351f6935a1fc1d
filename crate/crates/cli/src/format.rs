//! Locale-free number formatting shared by every CSV writer.

/// Fixed point with seven decimals, the precision of the published tables.
pub fn energy(value: f64) -> String {
    format!("{value:.7}")
}

/// Twelve significant digits.
pub fn sample(value: f64) -> String {
    if value.is_finite() {
        format!("{value:.11e}")
    } else if value.is_nan() {
        "nan".to_string()
    } else if value > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

pub fn small(value: f64) -> String {
    format!("{value:.3e}")
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(energy(2.5), "2.5000000");
        assert_eq!(energy(12.29516581), "12.2951658");
        assert_eq!(sample(0.0), "0.00000000000e0");
        assert_eq!(sample(-1.0 / 3.0), "-3.33333333333e-1");
        assert_eq!(sample(f64::INFINITY), "inf");
        assert_eq!(
            csv(&["a", "b"], &[vec!["1".into(), "2".into()]]),
            "a,b\n1,2\n"
        );
    }
}
