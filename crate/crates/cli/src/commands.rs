//! The build / dmc / homology commands.

use std::path::Path;
use std::time::Instant;

use morse_core::homology::{reduced_homology_threaded, HomologyGroups};
use morse_core::io;
use morse_core::morse_complex::{discrete_morse_complex, pure_morse_complex};
use morse_core::{Result, SimplicialComplex};

use crate::report::{HomologyDoc, RunReport};

pub struct GlobalOpts {
    pub threads: usize,
    pub max_faces: usize,
}

fn load_complex(path: &Path) -> Result<(SimplicialComplex, io::VertexRemap)> {
    let text = std::fs::read_to_string(path)?;
    io::parse_complex(&text)
}

fn fill_complex_summary(report: &mut RunReport, complex: &SimplicialComplex) {
    report.f_vector = Some(complex.f_vector().counts().to_vec());
    report.dim = Some(complex.dim());
    report.pure = Some(complex.is_pure());
    report.facet_count = Some(complex.facet_ids().len());
}

fn homology_doc(h: &HomologyGroups) -> HomologyDoc {
    HomologyDoc {
        betti: h.betti_numbers().to_vec(),
        torsion: h
            .torsion_lists()
            .iter()
            .map(|t| t.iter().map(|d| d.to_string()).collect())
            .collect(),
    }
}

/// Parses a facet file and reports the complex summary.
pub fn cmd_build(input: &Path, opts: &GlobalOpts) -> Result<RunReport> {
    let started = Instant::now();
    let mut report = RunReport::new("build");
    report.param("input", input.display());
    report.param("threads", opts.threads);
    let (complex, remap) = load_complex(input)?;
    fill_complex_summary(&mut report, &complex);
    if !remap.is_identity() {
        report.vertex_map = Some(remap.original.clone());
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Builds the (pure) Morse complex, optionally exporting its facet list.
pub fn cmd_dmc(
    input: &Path,
    pure: bool,
    export: Option<&Path>,
    opts: &GlobalOpts,
) -> Result<RunReport> {
    let started = Instant::now();
    let mut report = RunReport::new("dmc");
    report.param("input", input.display());
    report.param("pure", pure);
    report.param("threads", opts.threads);
    report.param("max_faces", opts.max_faces);
    let (complex, _) = load_complex(input)?;
    let mc = if pure {
        pure_morse_complex(&complex, opts.max_faces, opts.threads)?
    } else {
        discrete_morse_complex(&complex, opts.max_faces, opts.threads)?
    };
    fill_complex_summary(&mut report, mc.complex());
    if let Some(path) = export {
        std::fs::write(path, io::write_facets(mc.complex()))?;
        report.param("export", path.display());
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

/// Computes homology of the complex in a facet file.
pub fn cmd_homology(input: &Path, reduced: bool, opts: &GlobalOpts) -> Result<RunReport> {
    let started = Instant::now();
    let mut report = RunReport::new("homology");
    report.param("input", input.display());
    report.param("reduced", reduced);
    report.param("threads", opts.threads);
    let (complex, _) = load_complex(input)?;
    fill_complex_summary(&mut report, &complex);
    let h = reduced_homology_threaded(&complex, opts.threads)?;
    let mut doc = homology_doc(&h);
    if !reduced {
        // unreduced homology differs only in degree zero
        doc.betti[0] += 1;
    }
    report.homology = Some(doc);
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}
