//! Deterministic number formatting shared by the CLI, CSV writers, and the
//! report renderer.

/// Formats `x` with 9 significant digits.
///
/// Fixed-point for |x| in [1e-3, 1e6), scientific otherwise. Zero prints as
/// "0.00000000". The mapping is locale-free and stable across runs, so any
/// serialized output is byte-identical on repeated invocations.
pub fn sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }
    if x == 0.0 {
        return "0.00000000".to_string();
    }
    let mag = x.abs();
    if (1e-3..1e6).contains(&mag) {
        let decimals = 8 - mag.log10().floor() as i32;
        format!("{:.*}", decimals.max(0) as usize, x)
    } else {
        format!("{:.8e}", x)
    }
}

/// Renders rows of already-formatted cells as a CSV string with the given
/// header. No quoting is performed; callers only emit numeric cells and
/// bare-word labels.
pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
