use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::Serialize;

/// Writes `bytes` to `path` through a temporary file in the same directory,
/// or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<()> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes)?;
        return Ok(out.flush()?);
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("creating temporary file in {}", dir.display()))?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

/// CSV with a leading `# {json}` comment line.
pub fn csv_with_header<T: Serialize>(header: &T, columns: &[&str], rows: &[Vec<f64>]) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    writeln!(out, "# {}", serde_json::to_string(header)?)?;
    let mut w = csv::Writer::from_writer(&mut out);
    w.write_record(columns)?;
    for row in rows {
        w.write_record(row.iter().map(|v| format!("{v:?}")))?;
    }
    w.flush()?;
    drop(w);
    Ok(out)
}

/// Reads the `x` and `y` columns of a CSV; lines starting with `#` are
/// ignored.
pub fn read_pair_csv(path: &Path) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let headers = rdr.headers()?.clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let (Some(ix), Some(iy)) = (col("x"), col("y")) else {
        bail!("{}: expected columns `x` and `y`, found `{}`", path.display(), headers.iter().collect::<Vec<_>>().join(","));
    };
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for record in rdr.records() {
        let record = record.with_context(|| format!("reading {}", path.display()))?;
        let row = record.position().map_or(0, |p| p.line());
        let parse = |i: usize, name: &str| -> Result<f64> {
            let raw = record.get(i).unwrap_or("");
            match raw.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(v),
                _ => bail!("{} row {row}: non-numeric {name} `{raw}`", path.display()),
            }
        };
        x.push(parse(ix, "x")?);
        y.push(parse(iy, "y")?);
    }
    if x.is_empty() {
        bail!("{}: no data rows", path.display());
    }
    Ok((x, y))
}
