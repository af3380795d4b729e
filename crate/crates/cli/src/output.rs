//! Plain-text artifacts: CSV profiles and JSON documents, written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const CSV_HEADER: &str = "x,u";

/// `x,u` rows with 17 significant digits; independent of locale.
pub fn csv_string(grid: &[f64], values: &[f64]) -> String {
    let mut s = String::with_capacity(48 * (grid.len() + 1));
    s.push_str(CSV_HEADER);
    s.push('\n');
    for (x, u) in grid.iter().zip(values) {
        // writing into a String cannot fail
        let _ = writeln!(Fmt(&mut s), "{x:.16e},{u:.16e}");
    }
    s
}

struct Fmt<'a>(&'a mut String);

impl Write for Fmt<'_> {
    fn write(&mut self, buf: &[u8]) -> std::io::Result<usize> {
        self.0
            .push_str(std::str::from_utf8(buf).expect("formatted floats are ASCII"));
        Ok(buf.len())
    }

    fn flush(&mut self) -> std::io::Result<()> {
        Ok(())
    }
}

pub fn json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Writes every `(name, contents)` pair into `dir`. All files are first
/// written under temporary names and only renamed once every write
/// succeeded; on any failure nothing from this call is left behind.
pub fn write_all_atomic(dir: &Path, files: &[(String, String)]) -> CliResult<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut staged: Vec<(PathBuf, PathBuf)> = Vec::with_capacity(files.len());
    let cleanup = |staged: &[(PathBuf, PathBuf)]| {
        for (tmp, _) in staged {
            let _ = fs::remove_file(tmp);
        }
    };
    for (name, contents) in files {
        let target = dir.join(name);
        let tmp = dir.join(format!(".{name}.tmp"));
        if let Err(e) = fs::write(&tmp, contents) {
            let _ = fs::remove_file(&tmp);
            cleanup(&staged);
            return Err(CliError::io(tmp, e));
        }
        staged.push((tmp, target));
    }
    for (i, (tmp, target)) in staged.iter().enumerate() {
        if let Err(e) = fs::rename(tmp, target) {
            cleanup(&staged[i..]);
            // outputs of a failed run are not kept either
            for (_, done) in &staged[..i] {
                let _ = fs::remove_file(done);
            }
            return Err(CliError::io(target, e));
        }
    }
    Ok(staged.into_iter().map(|(_, target)| target).collect())
}

/// File name of the profile at time `t`, e.g. `u_t2.5.csv`.
pub fn profile_file_name(t: f64) -> String {
    format!("u_t{t}.csv")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let s = csv_string(&[-1.0, 0.5], &[0.1, -2.0 / 3.0]);
        let lines: Vec<&str> = s.split('\n').collect();
        assert_eq!(lines[0], "x,u");
        assert_eq!(lines[1], "-1.0000000000000000e0,1.0000000000000001e-1");
        assert_eq!(lines[2], "5.0000000000000000e-1,-6.6666666666666663e-1");
        assert_eq!(lines[3], "");
        assert!(!s.contains('\r'));
    }

    #[test]
    fn csv_values_parse_back_exactly() {
        let values = [std::f64::consts::PI, -1e-300, 123456.789, f64::MIN_POSITIVE];
        let s = csv_string(&values, &values);
        for (line, v) in s.lines().skip(1).zip(values) {
            let (x, u) = line.split_once(',').unwrap();
            assert_eq!(x.parse::<f64>().unwrap().to_bits(), v.to_bits());
            assert_eq!(u.parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
    }

    #[test]
    fn file_names() {
        assert_eq!(profile_file_name(30.0), "u_t30.csv");
        assert_eq!(profile_file_name(2.5), "u_t2.5.csv");
    }
}
