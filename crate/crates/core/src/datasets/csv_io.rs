use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::PointCloud;
use crate::error::{Error, Result};

/// Reads a point cloud from a delimited text file, one point per row.
///
/// A single leading header row is skipped when any of its fields fails to
/// parse as a number.
pub fn load_csv(path: impl AsRef<Path>, delimiter: u8) -> Result<PointCloud> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_csv(file, delimiter)
}

pub fn read_csv<R: Read>(reader: R, delimiter: u8) -> Result<PointCloud> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .delimiter(delimiter)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut coords = Vec::new();
    let mut dim = None;
    let mut rows = 0usize;
    let mut record = csv::StringRecord::new();
    let mut first = true;
    loop {
        match rdr.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => return Err(Error::Parse(e.to_string())),
        }
        let line = record.position().map_or(rows + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: Vec<Option<f64>> = record.iter().map(|f| f.parse::<f64>().ok()).collect();
        if first {
            first = false;
            if parsed.iter().any(Option::is_none) {
                // header row
                continue;
            }
        }
        match dim {
            None => dim = Some(parsed.len()),
            Some(d) if d != parsed.len() => {
                return Err(Error::Parse(format!(
                    "ragged row at line {line}: expected {d} fields, found {}",
                    parsed.len()
                )))
            }
            Some(_) => {}
        }
        for (col, (value, raw)) in parsed.iter().zip(record.iter()).enumerate() {
            match value {
                Some(v) if v.is_finite() => coords.push(*v),
                Some(_) => {
                    return Err(Error::Parse(format!(
                        "non-finite value '{raw}' at line {line}, column {}",
                        col + 1
                    )))
                }
                None => {
                    return Err(Error::Parse(format!(
                        "non-numeric field '{raw}' at line {line}, column {}",
                        col + 1
                    )))
                }
            }
        }
        rows += 1;
    }
    if rows < 2 {
        return Err(Error::Input(format!("need at least 2 points, file has {rows}")));
    }
    PointCloud::new(rows, dim.unwrap_or(0), coords)
}

/// Writes one point per row using the shortest round-trip float representation.
pub fn save_csv(cloud: &PointCloud, path: impl AsRef<Path>, delimiter: u8) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = std::io::BufWriter::new(file);
    write_csv(cloud, &mut out, delimiter).map_err(|e| Error::io(path, e))?;
    out.flush().map_err(|e| Error::io(path, e))
}

pub fn write_csv<W: Write + ?Sized>(cloud: &PointCloud, out: &mut W, delimiter: u8) -> std::io::Result<()> {
    let sep = delimiter as char;
    let mut line = String::new();
    for p in cloud.points() {
        line.clear();
        for (k, v) in p.iter().enumerate() {
            if k > 0 {
                line.push(sep);
            }
            line.push_str(&v.to_string());
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}
