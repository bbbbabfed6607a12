//! OFF and JSON export of prism patches.

use std::fmt::Write as _;
use std::path::Path;

use dlat_core::geometry::{polygon_faces, PrismTile, Rational};
use serde_json::{json, Value};

use crate::document::exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum MeshError {
    #[error("OFF export needs ambient dimension 2 or 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("tile of dimension {actual} in a mesh of dimension {expected}")]
    MixedDimensions { expected: usize, actual: usize },
    #[error(transparent)]
    Core(#[from] dlat_core::Error),
    #[error("cannot write mesh: {0}")]
    Io(#[from] std::io::Error),
}

/// Renders `tiles` (all of ambient dimension `n`) in the given format.
///
/// OFF lists every tile's vertices separately (shared vertices are repeated)
/// followed by the polygonal faces of each tile; planar tiles get `z = 0`.
/// JSON follows `{"n": .., "tiles": [{"t": [..], "vertices": [[..], ..]}]}`
/// with every coordinate as an exact string.
pub fn render_mesh(n: usize, tiles: &[PrismTile], format: MeshFormat) -> Result<String, MeshError> {
    if let Some(bad) = tiles.iter().find(|t| t.n() != n) {
        return Err(MeshError::MixedDimensions {
            expected: n,
            actual: bad.n(),
        });
    }
    match format {
        MeshFormat::Off => render_off(n, tiles),
        MeshFormat::Json => Ok(render_json(n, tiles)),
    }
}

pub fn export_mesh(
    n: usize,
    tiles: &[PrismTile],
    format: MeshFormat,
    path: &Path,
) -> Result<(), MeshError> {
    let text = render_mesh(n, tiles, format)?;
    std::fs::write(path, text)?;
    Ok(())
}

fn render_off(n: usize, tiles: &[PrismTile]) -> Result<String, MeshError> {
    if !(2..=3).contains(&n) {
        return Err(MeshError::UnsupportedDimension(n));
    }
    let faces = polygon_faces(n)?;
    let per_tile = tiles.first().map_or(0, |t| t.vertices.len());
    let mut out = String::new();
    writeln!(out, "OFF").unwrap();
    writeln!(out, "{} {} 0", per_tile * tiles.len(), faces.len() * tiles.len()).unwrap();
    for tile in tiles {
        for v in &tile.vertices {
            let mut coords: Vec<String> = v.iter().map(|&x| decimal(&Rational::from_integer(x))).collect();
            coords.resize(3, "0".into());
            writeln!(out, "{}", coords.join(" ")).unwrap();
        }
    }
    for (k, _) in tiles.iter().enumerate() {
        for face in &faces {
            let indices: Vec<String> = face.iter().map(|i| (i + k * per_tile).to_string()).collect();
            writeln!(out, "{} {}", face.len(), indices.join(" ")).unwrap();
        }
    }
    Ok(out)
}

fn render_json(n: usize, tiles: &[PrismTile]) -> String {
    let strings = |xs: &[i64]| -> Value {
        xs.iter()
            .map(|&x| Value::String(exact(&Rational::from_integer(x))))
            .collect()
    };
    let tiles: Vec<Value> = tiles
        .iter()
        .map(|tile| {
            json!({
                "t": strings(&tile.t),
                "vertices": tile.vertices.iter().map(|v| strings(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&json!({ "n": n, "tiles": tiles })).expect("mesh json");
    text.push('\n');
    text
}

/// Decimal form of an exact rational: exact when the expansion terminates,
/// otherwise rounded toward zero after 12 digits.
pub fn decimal(r: &Rational) -> String {
    const DIGITS: usize = 12;
    let (numer, denom) = (*r.numer() as i128, *r.denom() as i128);
    let sign = if numer < 0 { "-" } else { "" };
    let (whole, mut rem) = (numer.abs() / denom, numer.abs() % denom);
    if rem == 0 {
        return format!("{sign}{whole}");
    }
    let mut frac = String::new();
    while rem != 0 && frac.len() < DIGITS {
        rem *= 10;
        frac.push(char::from(b'0' + (rem / denom) as u8));
        rem %= denom;
    }
    format!("{sign}{whole}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use dlat_core::geometry::generate_patch;

    #[test]
    fn decimals() {
        assert_eq!(decimal(&Rational::new(3, 1)), "3");
        assert_eq!(decimal(&Rational::new(-1, 4)), "-0.25");
        assert_eq!(decimal(&Rational::new(1, 3)), "0.333333333333");
    }

    #[test]
    fn hexagonal_prism_off() {
        let tiles = generate_patch(3, 0).unwrap();
        let off = render_mesh(3, &tiles, MeshFormat::Off).unwrap();
        let lines: Vec<&str> = off.lines().collect();
        assert_eq!(lines[0], "OFF");
        assert_eq!(lines[1], "12 8 0");
        assert_eq!(lines.len(), 2 + 12 + 8);
        assert_eq!(lines[2], "1 2 3");
    }

    #[test]
    fn square_patch_json_and_off() {
        let tiles = generate_patch(2, 1).unwrap();
        let json: Value = serde_json::from_str(&render_mesh(2, &tiles, MeshFormat::Json).unwrap()).unwrap();
        assert_eq!(json["n"], 2);
        let listed = json["tiles"].as_array().unwrap();
        assert_eq!(listed.len(), 9);
        assert!(listed.iter().all(|t| t["vertices"].as_array().unwrap().len() == 4));
        assert_eq!(listed[0]["t"][0], "-1");

        let off = render_mesh(2, &tiles, MeshFormat::Off).unwrap();
        assert!(off.starts_with("OFF\n36 9 0\n"));
        assert!(off.lines().nth(2).unwrap().ends_with(" 0"));
    }

    #[test]
    fn empty_and_unsupported() {
        assert_eq!(render_mesh(3, &[], MeshFormat::Off).unwrap(), "OFF\n0 0 0\n");
        let json: Value = serde_json::from_str(&render_mesh(4, &[], MeshFormat::Json).unwrap()).unwrap();
        assert_eq!(json["tiles"].as_array().unwrap().len(), 0);
        let tiles = generate_patch(4, 0).unwrap();
        assert!(matches!(
            render_mesh(4, &tiles, MeshFormat::Off),
            Err(MeshError::UnsupportedDimension(4))
        ));
        assert!(matches!(
            render_mesh(3, &tiles, MeshFormat::Json),
            Err(MeshError::MixedDimensions { .. })
        ));
    }

    #[test]
    fn export_writes_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("prism.off");
        export_mesh(3, &generate_patch(3, 0).unwrap(), MeshFormat::Off, &path).unwrap();
        assert!(std::fs::read_to_string(&path).unwrap().starts_with("OFF\n12 8 0"));
        let missing = dir.path().join("no/such/dir.off");
        assert!(matches!(
            export_mesh(3, &[], MeshFormat::Off, &missing),
            Err(MeshError::Io(_))
        ));
    }
}
