//! Frame diagnostics as JSON documents.

use framekit_core::frames::{
    complementary_frame, frame_bounds, is_parseval, naimark_embed, stochastic_profile, Field,
};
use framekit_core::Error as CoreError;
use serde::Serialize;
use serde_json::Value;

use crate::catalog::FrameSource;
use crate::json::{matrix_value, vectors_value};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Analysis {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub field: &'static str,
    pub bounds: [f64; 2],
    pub parseval_residual: f64,
    pub is_parseval: bool,
    /// The remaining fields need a normalized Parseval frame.
    pub kappa: Option<Vec<f64>>,
    pub kappa_sum: Option<f64>,
    pub eta: Option<f64>,
    pub zeta: Option<f64>,
    pub varpi: Option<Vec<f64>>,
    pub r: Option<f64>,
}

pub fn analyze(src: &FrameSource, tol: f64) -> Result<Analysis> {
    let f = &src.frame;
    let (a, b) = frame_bounds(f)?;
    let check = is_parseval(f, tol);
    let mut out = Analysis {
        m: f.len(),
        n: f.dim(),
        field: field_tag(f.field()),
        bounds: [a, b],
        parseval_residual: check.residual,
        is_parseval: check.is_parseval,
        kappa: None,
        kappa_sum: None,
        eta: None,
        zeta: None,
        varpi: None,
        r: None,
    };
    if let Some(nf) = &src.normalized {
        let p = stochastic_profile(nf)?;
        out.kappa = Some(nf.weights().to_vec());
        out.kappa_sum = Some(nf.weight_sum());
        out.eta = Some(p.eta);
        out.zeta = Some(p.zeta);
        out.varpi = Some(p.stationary);
        out.r = Some(p.perron_radius);
    }
    Ok(out)
}

fn field_tag(field: Field) -> &'static str {
    match field {
        Field::Real => "R",
        Field::Complex => "C",
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Embedding {
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub pi: Value,
    pub phi: Value,
    /// `None` when `M = N`.
    pub complement: Option<Complement>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Complement {
    pub vectors: Value,
    pub basis: Value,
    pub superspace: Value,
}

/// Naimark projector, orthonormal system and complementary frame.
pub fn embedding(src: &FrameSource) -> Result<Embedding> {
    let f = &src.frame;
    let field = f.field();
    let emb = naimark_embed(f)?;
    let complement = match complementary_frame(f) {
        Ok(c) => Some(Complement {
            vectors: vectors_value(c.frame.vectors(), field),
            basis: vectors_value(&c.basis, field),
            superspace: vectors_value(&c.superspace, field),
        }),
        Err(CoreError::NoComplement) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(Embedding {
        m: f.len(),
        n: f.dim(),
        pi: matrix_value(&emb.pi, field),
        phi: vectors_value(&emb.phi, field),
        complement,
    })
}
