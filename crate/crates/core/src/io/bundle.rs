//! The `amub-bundle/1` JSON file format.
//!
//! Floats are written with 17 significant digits so every `f64` round-trips
//! exactly, and the layout is fixed, so identical collections serialize to
//! identical bytes. Nesting up to the basis level is indented; each vector
//! sits on one line.

use std::fs;
use std::io::{self, Write as _};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::bases::{
    gamma_with, witness_value, BasesError, BasisCollection, Components, FieldTag, GammaReport, OrthonormalBasis,
    Tolerance, UnitVector,
};
use crate::constructions::ConstructionSpec;

use super::IoError;

pub const FORMAT_TAG: &str = "amub-bundle/1";

/// Containers nested at most this deep are laid out one element per line.
const PRETTY_DEPTH: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Component {
    Complex([f64; 2]),
    Real(f64),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleFile {
    format: String,
    field: FieldTag,
    dimension: usize,
    basis_count: usize,
    construction: Option<ConstructionSpec>,
    data: Vec<Vec<Vec<Component>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificate: Option<GammaReport>,
}

/// A collection as stored on disk: shape-checked, not yet checked for
/// orthonormality.
#[derive(Clone, Debug, PartialEq)]
pub struct Bundle {
    pub field: FieldTag,
    pub dimension: usize,
    pub construction: Option<ConstructionSpec>,
    pub data: Vec<Vec<Components>>,
    pub certificate: Option<GammaReport>,
}

impl Bundle {
    pub fn from_collection(coll: &BasisCollection, certificate: Option<GammaReport>) -> Self {
        let data = coll
            .bases()
            .iter()
            .map(|b| b.vectors().iter().map(|v| v.components().clone()).collect())
            .collect();
        Bundle {
            field: coll.tag(),
            dimension: coll.dim(),
            construction: coll.provenance().cloned(),
            data,
            certificate,
        }
    }

    /// Builds the collection and, for `n ≥ 2`, its certificate.
    pub fn certified(coll: &BasisCollection, tol: Tolerance) -> Result<Self, BasesError> {
        let certificate = if coll.len() >= 2 { Some(gamma_with(coll, tol)?) } else { None };
        Ok(Self::from_collection(coll, certificate))
    }

    pub fn basis_count(&self) -> usize {
        self.data.len()
    }

    pub fn to_collection(&self, tol: Tolerance) -> Result<BasisCollection, BasesError> {
        let bases = self
            .data
            .iter()
            .map(|basis| {
                let vectors = basis
                    .iter()
                    .map(|c| UnitVector::new(c.clone(), tol))
                    .collect::<Result<Vec<_>, _>>()?;
                OrthonormalBasis::new(vectors, tol)
            })
            .collect::<Result<Vec<_>, _>>()?;
        BasisCollection::new(bases, self.construction.clone())
    }

    pub fn to_json(&self) -> String {
        let file = BundleFile {
            format: FORMAT_TAG.to_string(),
            field: self.field,
            dimension: self.dimension,
            basis_count: self.data.len(),
            construction: self.construction.clone(),
            data: self
                .data
                .iter()
                .map(|basis| {
                    basis
                        .iter()
                        .map(|c| match c {
                            Components::Complex(v) => v.iter().map(|z| Component::Complex([z.re, z.im])).collect(),
                            Components::Real(v) => v.iter().map(|&x| Component::Real(x)).collect(),
                        })
                        .collect()
                })
                .collect(),
            certificate: self.certificate.clone(),
        };
        let mut out = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut out, BundleFormatter::default());
        file.serialize(&mut ser).expect("bundle serialization is infallible");
        ser.into_inner();
        out.push(b'\n');
        String::from_utf8(out).expect("serde_json writes UTF-8")
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let file: BundleFile = serde_json::from_str(text).map_err(|e| IoError::Malformed(e.to_string()))?;
        if file.format != FORMAT_TAG {
            return Err(IoError::Malformed(format!("format tag {:?}, expected {FORMAT_TAG:?}", file.format)));
        }
        let d = file.dimension;
        if d == 0 {
            return Err(IoError::Malformed("dimension must be positive".into()));
        }
        if file.data.len() != file.basis_count {
            return Err(IoError::Malformed(format!(
                "basis_count is {} but data holds {} bases",
                file.basis_count,
                file.data.len()
            )));
        }
        if file.basis_count == 0 {
            return Err(IoError::Malformed("bundle holds no bases".into()));
        }
        let mut data = Vec::with_capacity(file.data.len());
        for (bi, basis) in file.data.into_iter().enumerate() {
            if basis.len() != d {
                return Err(IoError::Malformed(format!("basis {bi} has {} vectors, expected {d}", basis.len())));
            }
            let mut vectors = Vec::with_capacity(d);
            for (vi, v) in basis.into_iter().enumerate() {
                if v.len() != d {
                    return Err(IoError::Malformed(format!(
                        "vector {vi} of basis {bi} has {} components, expected {d}",
                        v.len()
                    )));
                }
                let comps = match file.field {
                    FieldTag::C => v
                        .into_iter()
                        .map(|c| match c {
                            Component::Complex([re, im]) => Ok(Complex64::new(re, im)),
                            Component::Real(_) => Err(()),
                        })
                        .collect::<Result<Vec<_>, _>>()
                        .map(Components::Complex),
                    FieldTag::R => v
                        .into_iter()
                        .map(|c| match c {
                            Component::Real(x) => Ok(x),
                            Component::Complex(_) => Err(()),
                        })
                        .collect::<Result<Vec<_>, _>>()
                        .map(Components::Real),
                };
                let comps = comps.map_err(|_| {
                    IoError::Malformed(format!("vector {vi} of basis {bi} does not match field {}", file.field))
                })?;
                vectors.push(comps);
            }
            data.push(vectors);
        }
        if let Some(cert) = &file.certificate {
            if cert.dimension != d || cert.basis_count != file.basis_count || cert.field != file.field {
                return Err(IoError::Malformed("certificate shape disagrees with the bundle".into()));
            }
        }
        Ok(Bundle { field: file.field, dimension: d, construction: file.construction, data, certificate: file.certificate })
    }
}

/// Writes via a temporary file in the same directory, then renames.
pub fn write_bundle(path: &Path, bundle: &Bundle) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "no file name"))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bundle.to_json().as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

pub fn read_bundle(path: &Path) -> Result<Bundle, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::Io(format!("{}: {e}", path.display())))?;
    Bundle::from_json(&text)
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerifyStatus {
    Match,
    Mismatch(Vec<String>),
    NotOrthonormal(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOutcome {
    pub status: VerifyStatus,
    /// Freshly computed certificate, when the bundle has at least two bases
    /// and passes orthonormality.
    pub report: Option<GammaReport>,
}

impl VerifyOutcome {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            VerifyStatus::Match => 0,
            _ => 1,
        }
    }
}

/// Re-derives the certificate and compares it with the embedded one.
pub fn verify_bundle(bundle: &Bundle, tol: Tolerance) -> VerifyOutcome {
    let coll = match bundle.to_collection(tol) {
        Ok(c) => c,
        Err(e) => return VerifyOutcome { status: VerifyStatus::NotOrthonormal(e.to_string()), report: None },
    };
    if coll.len() < 2 {
        let status = match &bundle.certificate {
            None => VerifyStatus::Match,
            Some(_) => VerifyStatus::Mismatch(vec!["certificate present for a single basis".into()]),
        };
        return VerifyOutcome { status, report: None };
    }
    let report = gamma_with(&coll, tol).expect("n >= 2 and orthonormal");
    let tau = report.tolerance;
    let mut problems = Vec::new();
    match &bundle.certificate {
        None => problems.push("bundle carries no certificate".to_string()),
        Some(cert) => {
            if (cert.gamma - report.gamma).abs() > tau {
                problems.push(format!("gamma {} recomputed as {}", cert.gamma, report.gamma));
            }
            match witness_value(&coll, &cert.witness) {
                Ok(v) if (v - cert.gamma).abs() <= tau => {}
                Ok(v) => problems.push(format!("witness {:?} evaluates to {v}, not {}", cert.witness, cert.gamma)),
                Err(e) => problems.push(e.to_string()),
            }
            if !cert.verdict.matches(&report.verdict, tau) {
                problems.push(format!("verdict {} recomputed as {}", cert.verdict, report.verdict));
            }
            if cert.design != report.design {
                problems.push("design flags differ".to_string());
            }
        }
    }
    let status = if problems.is_empty() { VerifyStatus::Match } else { VerifyStatus::Mismatch(problems) };
    VerifyOutcome { status, report: Some(report) }
}

/// serde_json formatter with fixed float formatting and depth-limited
/// indentation.
#[derive(Default)]
struct BundleFormatter {
    depth: usize,
    has_value: Vec<bool>,
}

impl BundleFormatter {
    fn pretty(&self) -> bool {
        self.depth <= PRETTY_DEPTH
    }

    fn newline<W: ?Sized + io::Write>(&self, w: &mut W, depth: usize) -> io::Result<()> {
        w.write_all(b"\n")?;
        for _ in 0..depth {
            w.write_all(b"  ")?;
        }
        Ok(())
    }

    fn open<W: ?Sized + io::Write>(&mut self, w: &mut W, bracket: &[u8]) -> io::Result<()> {
        self.depth += 1;
        self.has_value.push(false);
        w.write_all(bracket)
    }

    fn close<W: ?Sized + io::Write>(&mut self, w: &mut W, bracket: &[u8]) -> io::Result<()> {
        let had = self.has_value.pop().unwrap_or(false);
        if had && self.pretty() {
            self.newline(w, self.depth - 1)?;
        }
        self.depth -= 1;
        w.write_all(bracket)
    }

    fn element<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        if let Some(h) = self.has_value.last_mut() {
            *h = true;
        }
        if !first {
            w.write_all(if self.pretty() { b"," } else { b", " })?;
        }
        if self.pretty() {
            self.newline(w, self.depth)?;
        }
        Ok(())
    }
}

impl Formatter for BundleFormatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.open(w, b"[")
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.close(w, b"]")
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.element(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, _w: &mut W) -> io::Result<()> {
        Ok(())
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.open(w, b"{")
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.close(w, b"}")
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.element(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        w.write_all(b": ")
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, _w: &mut W) -> io::Result<()> {
        Ok(())
    }
}
