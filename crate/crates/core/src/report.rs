//! The bundled result of analyzing one polygon, as JSON or text.

use serde::{Deserialize, Serialize};

use crate::delpezzo::{classify_one_singularity, ldp_analyze, Classification, LdpData};
use crate::embedding::{embedding_data, minimal_system, EmbeddingData, QuadricIdealReport, RankCheck};
use crate::error::{Error, Result};
use crate::graphs::graph_of;
use crate::lattice::LatticePolygon;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub ldp: LdpData,
    /// Rendering of the weighted circular graph.
    pub graph: String,
    pub classification: Option<Classification>,
    /// `P(1,1,p+1)` for the first family.
    pub label: Option<String>,
    pub embedding: EmbeddingData,
    pub quadrics: Option<QuadricIdealReport>,
}

impl Report {
    pub fn new(q: &LatticePolygon, quadrics: Option<RankCheck>) -> Result<Self> {
        let ldp = ldp_analyze(q)?;
        let graph = graph_of(&ldp.fan)?.to_string();
        let classification = match classify_one_singularity(q) {
            Ok(c) => Some(c),
            Err(Error::SingularCount(_)) => None,
            Err(e) => return Err(e),
        };
        let label = classification.as_ref().filter(|c| c.k == 1).map(|c| format!("P(1,1,{})", c.p + 1));
        let embedding = embedding_data(&ldp)?;
        let quadrics = quadrics.map(|check| minimal_system(&embedding, check)).transpose()?;
        Ok(Report { ldp, graph, classification, label, embedding, quadrics })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }

    pub fn to_text(&self) -> String {
        let l = &self.ldp;
        let polar: Vec<String> = l.polar.vertices().iter().map(|v| v.to_string()).collect();
        let mut out = format!(
            "polygon: {}\nindex: {}\nK^2: {}\npicard: {}\nsingular cones: {}\n",
            l.polygon, l.index, l.analysis.k2, l.analysis.picard, l.singular_count
        );
        for (i, c) in l.analysis.cones.iter().enumerate().filter(|(_, c)| !c.is_basic()) {
            out.push_str(&format!("  cone {i}: ({},{})-cone, singularity {}, l_F = {}\n", c.p, c.q, c.singularity, c.local_index));
        }
        out.push_str(&format!("polar vertices: {}\ngraph: {}\n", polar.join(", "), self.graph));
        if let Some(c) = &self.classification {
            out.push_str(&format!("class: Q_{}^[{}] via {}\n", c.p, c.k, c.transform));
        }
        if let Some(label) = &self.label {
            out.push_str(&format!("weighted projective plane: {label}\n"));
        }
        let e = &self.embedding;
        out.push_str(&format!(
            "embedding: delta = {}, d = {}, boundary = {}, g = {}\n",
            e.delta, e.degree, e.boundary, e.interior
        ));
        if let Some(r) = &self.quadrics {
            out.push_str(&format!("quadrics: beta = {}", r.beta));
            if let Some(rank) = r.rank {
                out.push_str(&format!(" (rank {rank})"));
            }
            out.push('\n');
        }
        out
    }
}
