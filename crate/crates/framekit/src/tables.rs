//! CSV tables. Every table has a header row; reals are written with 17
//! significant digits.

use std::io::Read;

use framekit_core::cutproject::PointSet;
use framekit_core::lattice::Node;
use framekit_core::quantize::Observable;

use crate::{Error, Result};

/// `x` in scientific notation with 17 significant digits; `-0` prints as `0`.
pub fn real(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

fn writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("ascii output")
}

fn names(prefix: &str, n: usize) -> impl Iterator<Item = String> + '_ {
    (1..=n).map(move |i| format!("{prefix}{i}"))
}

/// `n1,…,nD,x,y[,z]`.
pub fn lattice_csv<const D: usize>(nodes: &[Node<D>]) -> String {
    let mut w = writer();
    let axes = ["x", "y", "z"];
    let header: Vec<String> = names("n", D)
        .chain(axes[..D - 1].iter().map(|s| s.to_string()))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for n in nodes {
        let rec: Vec<String> = n
            .coords()
            .iter()
            .map(|c| c.to_string())
            .chain(n.embed().into_iter().map(real))
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}

/// `n1..nM,x1..xN,s1..sK,count`; `count` is the number of preimages merged into the point.
pub fn points_csv(set: &PointSet, m: usize, n: usize) -> String {
    let mut w = writer();
    let header: Vec<String> = names("n", m)
        .chain(names("x", n))
        .chain(names("s", m - n))
        .chain(std::iter::once("count".to_string()))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for p in &set.points {
        let q = &p.point;
        let rec: Vec<String> = q
            .preimage
            .iter()
            .map(|c| c.to_string())
            .chain(q.physical.iter().map(|&x| real(x)))
            .chain(q.internal.iter().map(|&x| real(x)))
            .chain(std::iter::once(p.multiplicity().to_string()))
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}

/// `q1..qN,intensity`.
pub fn diffraction_csv(grid: &[Vec<f64>], intensity: &[f64]) -> String {
    let mut w = writer();
    let n = grid.first().map_or(0, Vec::len);
    let header: Vec<String> = names("q", n)
        .chain(std::iter::once("intensity".to_string()))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for (q, i) in grid.iter().zip(intensity) {
        let rec: Vec<String> = q
            .iter()
            .map(|&x| real(x))
            .chain(std::iter::once(real(*i)))
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}

/// `step,v1..vM`, one row per iterate.
pub fn trace_csv(trace: &[Observable]) -> String {
    let mut w = writer();
    let m = trace.first().map_or(0, Observable::len);
    let header: Vec<String> = std::iter::once("step".to_string())
        .chain(names("v", m))
        .collect();
    w.write_record(&header).expect("in-memory write");
    for (k, obs) in trace.iter().enumerate() {
        let rec: Vec<String> = std::iter::once((k + 1).to_string())
            .chain(obs.values().iter().map(|&x| real(x)))
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    finish(w)
}

fn parse_f64(s: &str, what: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} {s:?}")))
}

/// Observable from CSV `index,value` rows (header optional, any row order)
/// or from a JSON array of numbers.
pub fn read_observable(text: &str) -> Result<Observable> {
    if text.trim_start().starts_with('[') {
        let values: Vec<f64> = serde_json::from_str(text)?;
        return Ok(Observable::new(values)?);
    }
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<(usize, f64)> = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec?;
        if rec.len() != 2 {
            return Err(Error::Parse(format!(
                "observable row {} needs 2 fields",
                line + 1
            )));
        }
        if line == 0 && rec[0].parse::<usize>().is_err() {
            continue;
        }
        let index = rec[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad index {:?}", &rec[0])))?;
        rows.push((index, parse_f64(&rec[1], "value")?));
    }
    rows.sort_by_key(|r| r.0);
    for (expected, (index, _)) in rows.iter().enumerate() {
        if *index != expected {
            return Err(Error::Parse(format!(
                "observable indices must be 0..{} exactly once",
                rows.len()
            )));
        }
    }
    Ok(Observable::new(rows.into_iter().map(|r| r.1).collect())?)
}

/// Physical coordinates from a point CSV.
///
/// With a header, the columns named `x1, x2, …` (or `x, y, z`) are used;
/// without one, every column is a coordinate.
pub fn read_points(input: impl Read) -> Result<Vec<Vec<f64>>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut records = rdr.records();
    let Some(first) = records.next().transpose()? else {
        return Ok(Vec::new());
    };
    let mut points = Vec::new();
    let columns: Vec<usize> = if first.iter().all(|s| s.parse::<f64>().is_ok()) {
        points.push(
            first
                .iter()
                .map(|s| parse_f64(s, "coordinate"))
                .collect::<Result<Vec<_>>>()?,
        );
        (0..first.len()).collect()
    } else {
        let numbered: Vec<usize> = first
            .iter()
            .enumerate()
            .filter(|(_, h)| {
                h.strip_prefix('x')
                    .is_some_and(|d| d.parse::<usize>().is_ok())
            })
            .map(|(i, _)| i)
            .collect();
        if numbered.is_empty() {
            first
                .iter()
                .enumerate()
                .filter(|(_, h)| matches!(*h, "x" | "y" | "z"))
                .map(|(i, _)| i)
                .collect()
        } else {
            numbered
        }
    };
    if columns.is_empty() {
        return Err(Error::Parse("no coordinate columns in point file".into()));
    }
    for rec in records {
        let rec = rec?;
        let p = columns
            .iter()
            .map(|&c| {
                rec.get(c)
                    .ok_or_else(|| Error::Parse("short row".into()))
                    .and_then(|s| parse_f64(s, "coordinate"))
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(p);
    }
    Ok(points)
}

/// One axis of a q-grid, `qmin:qmax:steps`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Axis {
    fn samples(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let h = (self.max - self.min) / (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.max
                } else {
                    self.min + h * i as f64
                }
            })
            .collect()
    }
}

/// Parses `qmin:qmax:steps`, or `dim` comma-separated such specs.
pub fn parse_grid(spec: &str, dim: usize) -> Result<Vec<Axis>> {
    let axes = spec
        .split(',')
        .map(|part| {
            let f: Vec<&str> = part.split(':').collect();
            if f.len() != 3 {
                return Err(Error::Usage(format!(
                    "grid axis {part:?} is not qmin:qmax:steps"
                )));
            }
            let min = f[0]
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad qmin {:?}", f[0])))?;
            let max = f[1]
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad qmax {:?}", f[1])))?;
            let steps: usize = f[2]
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad steps {:?}", f[2])))?;
            if steps == 0 {
                return Err(Error::Usage("grid needs at least one step per axis".into()));
            }
            Ok(Axis { min, max, steps })
        })
        .collect::<Result<Vec<_>>>()?;
    match axes.len() {
        1 => Ok(vec![axes[0]; dim]),
        n if n == dim => Ok(axes),
        n => Err(Error::Usage(format!(
            "grid has {n} axes, points have {dim} coordinates"
        ))),
    }
}

/// Cartesian product of the axis samples, first axis outermost.
pub fn grid_points(axes: &[Axis]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = vec![Vec::new()];
    for axis in axes {
        let s = axis.samples();
        out = out
            .into_iter()
            .flat_map(|p| s.iter().map(move |&x| [p.as_slice(), &[x]].concat()))
            .collect();
    }
    out
}
