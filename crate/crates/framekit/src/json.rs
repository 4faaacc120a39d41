//! JSON documents: frames, matrices, quantization results.
//!
//! Frames are `{"field": "R"|"C", "dim": N, "vectors": [[...], ...]}` with an
//! optional `"weights"` array. With weights, `vectors` holds unit vectors
//! `uᵢ` and the frame is `√κᵢ uᵢ`; without, `vectors` holds the frame vectors
//! themselves. Complex scalars are `[re, im]` pairs.

use framekit_core::frames::{Field, Frame, NormalizedFrame};
use framekit_core::numlin::{Matrix, Vector};
use framekit_core::quantize::QuantizationResult;
use framekit_core::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::catalog::FrameSource;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Real(f64),
    Complex([f64; 2]),
}

impl Scalar {
    fn of(z: Complex64, field: Field) -> Scalar {
        match field {
            Field::Real => Scalar::Real(z.re),
            Field::Complex => Scalar::Complex([z.re, z.im]),
        }
    }

    fn value(self) -> Complex64 {
        match self {
            Scalar::Real(x) => Complex64::new(x, 0.0),
            Scalar::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameDoc {
    pub field: String,
    pub dim: usize,
    pub vectors: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
}

fn field_name(field: Field) -> &'static str {
    match field {
        Field::Real => "R",
        Field::Complex => "C",
    }
}

fn row(v: &Vector, field: Field) -> Vec<Scalar> {
    v.iter().map(|&z| Scalar::of(z, field)).collect()
}

impl FrameDoc {
    pub fn from_frame(f: &Frame) -> Self {
        FrameDoc {
            field: field_name(f.field()).into(),
            dim: f.dim(),
            vectors: f.vectors().iter().map(|v| row(v, f.field())).collect(),
            weights: None,
        }
    }

    pub fn from_normalized(nf: &NormalizedFrame) -> Self {
        let field = nf.to_frame().field();
        FrameDoc {
            field: field_name(field).into(),
            dim: nf.dim(),
            vectors: nf.units().iter().map(|v| row(v, field)).collect(),
            weights: Some(nf.weights().to_vec()),
        }
    }

    pub fn from_source(src: &FrameSource) -> Self {
        match (&src.normalized, src.weighted) {
            (Some(nf), true) => Self::from_normalized(nf),
            _ => Self::from_frame(&src.frame),
        }
    }

    pub fn into_source(self) -> Result<FrameSource> {
        let real = match self.field.as_str() {
            "R" => true,
            "C" => false,
            other => {
                return Err(Error::Parse(format!(
                    "field must be \"R\" or \"C\", got {other:?}"
                )))
            }
        };
        let vectors = self
            .vectors
            .into_iter()
            .map(|r| {
                if real && r.iter().any(|s| matches!(s, Scalar::Complex(_))) {
                    return Err(Error::Parse("complex entry in a real frame".into()));
                }
                Ok(Vector::new(r.into_iter().map(Scalar::value).collect())?)
            })
            .collect::<Result<Vec<_>>>()?;
        match self.weights {
            Some(w) => Ok(FrameSource::from_normalized(NormalizedFrame::new(
                self.dim, vectors, w,
            )?)),
            None => Ok(FrameSource::from_frame(Frame::new(self.dim, vectors)?)),
        }
    }
}

pub fn read_frame(text: &str) -> Result<FrameSource> {
    serde_json::from_str::<FrameDoc>(text)?.into_source()
}

pub fn write_frame(src: &FrameSource) -> String {
    pretty(&FrameDoc::from_source(src))
}

/// Rows of a matrix, as numbers for real fields and pairs otherwise.
pub fn matrix_value(m: &Matrix, field: Field) -> Value {
    let rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| Scalar::of(m[(i, j)], field))
                .collect()
        })
        .collect();
    serde_json::to_value(rows).expect("finite matrix")
}

pub fn vectors_value(vs: &[Vector], field: Field) -> Value {
    serde_json::to_value(vs.iter().map(|v| row(v, field)).collect::<Vec<_>>())
        .expect("finite vectors")
}

#[derive(Serialize)]
struct QuantizationDoc<'a> {
    #[serde(rename = "A")]
    a: Value,
    lower_symbol: &'a [f64],
    spectrum: &'a [f64],
    classical_avg: f64,
}

pub fn quantization_json(r: &QuantizationResult, field: Field) -> String {
    pretty(&QuantizationDoc {
        a: matrix_value(&r.a_f, field),
        lower_symbol: &r.lower_symbol,
        spectrum: &r.spectrum,
        classical_avg: r.classical_avg,
    })
}

/// Pretty JSON with a trailing newline.
pub fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
