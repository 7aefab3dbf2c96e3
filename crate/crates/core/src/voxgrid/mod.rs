//! Core voxel and image data types, file formats, dataset manifests, and a
//! synthetic cell-shape generator.
//!
//! Grids are dense row-major scalar fields indexed `(z, y, x)` with
//! `z` the depth axis. Binary grids contain only `{0.0, 1.0}` and carry a
//! `binary` flag set at construction.

mod io;
mod synth;

pub use io::{read_manifest, read_prior_file, read_voxel_file, write_manifest, write_prior_file, write_voxel_file, VoxelDtype};
pub use synth::{synth_shape, SynthClass};

use crate::{Error, Result};

/// Dense 3D scalar field. `dims` is `(depth, height, width)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VoxelGrid {
    dims: (usize, usize, usize),
    values: Vec<f64>,
    binary: bool,
}

impl VoxelGrid {
    /// Build a scalar grid, validating shape and finiteness.
    pub fn new(dims: (usize, usize, usize), values: Vec<f64>) -> Result<Self> {
        if dims.0 == 0 || dims.1 == 0 || dims.2 == 0 {
            return Err(Error::DimOverflow);
        }
        if values.len() != dims.0 * dims.1 * dims.2 {
            return Err(Error::DimMismatch);
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteState);
        }
        let binary = values.iter().all(|&v| v == 0.0 || v == 1.0);
        Ok(Self { dims, values, binary })
    }

    /// Build a grid that must contain only `{0.0, 1.0}`.
    pub fn new_binary(dims: (usize, usize, usize), values: Vec<f64>) -> Result<Self> {
        let g = Self::new(dims, values)?;
        if !g.binary {
            return Err(Error::BadFormat("binary grid contains non {0,1} values".into()));
        }
        Ok(g)
    }

    /// All-zero grid.
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        Self {
            dims,
            values: vec![0.0; dims.0 * dims.1 * dims.2],
            binary: true,
        }
    }

    /// Grid filled with a constant.
    pub fn filled(dims: (usize, usize, usize), v: f64) -> Self {
        Self {
            dims,
            values: vec![v; dims.0 * dims.1 * dims.2],
            binary: v == 0.0 || v == 1.0,
        }
    }

    pub(crate) fn from_values_unchecked(dims: (usize, usize, usize), values: Vec<f64>) -> Self {
        Self { dims, values, binary: false }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn depth(&self) -> usize {
        self.dims.0
    }

    pub fn height(&self) -> usize {
        self.dims.1
    }

    pub fn width(&self) -> usize {
        self.dims.2
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.binary
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        self.binary = false;
        &mut self.values
    }

    #[inline]
    pub fn idx(&self, z: usize, y: usize, x: usize) -> usize {
        (z * self.dims.1 + y) * self.dims.2 + x
    }

    #[inline]
    pub fn get(&self, z: usize, y: usize, x: usize) -> f64 {
        self.values[self.idx(z, y, x)]
    }

    pub fn set(&mut self, z: usize, y: usize, x: usize, v: f64) {
        let i = self.idx(z, y, x);
        self.values[i] = v;
        if !(v == 0.0 || v == 1.0) {
            self.binary = false;
        }
    }

    pub fn all_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Number of voxels with value > 0.5.
    pub fn count_foreground(&self) -> usize {
        self.values.iter().filter(|&&v| v > 0.5).count()
    }

    /// Binarize at a threshold, producing a `{0,1}` grid.
    pub fn threshold(&self, thr: f64) -> VoxelGrid {
        let values = self.values.iter().map(|&v| if v > thr { 1.0 } else { 0.0 }).collect();
        Self { dims: self.dims, values, binary: true }
    }

    /// Elementwise map; resulting grid re-checks the binary flag lazily.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> VoxelGrid {
        let values: Vec<f64> = self.values.iter().map(|&v| f(v)).collect();
        let binary = values.iter().all(|&v| v == 0.0 || v == 1.0);
        Self { dims: self.dims, values, binary }
    }
}

/// Two-channel 2D conditioning image: a fluorescence channel in `[0,1]` and a
/// binary mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Prior2D {
    height: usize,
    width: usize,
    fluorescence: Vec<f64>,
    mask: Vec<f64>,
}

impl Prior2D {
    pub fn new(height: usize, width: usize, fluorescence: Vec<f64>, mask: Vec<f64>) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::DimOverflow);
        }
        let n = height * width;
        if fluorescence.len() != n || mask.len() != n {
            return Err(Error::DimMismatch);
        }
        if !fluorescence.iter().all(|v| v.is_finite() && (0.0..=1.0).contains(v)) {
            return Err(Error::BadFormat("fluorescence values must lie in [0,1]".into()));
        }
        if !mask.iter().all(|&v| v == 0.0 || v == 1.0) {
            return Err(Error::BadFormat("mask values must be 0 or 1".into()));
        }
        Ok(Self { height, width, fluorescence, mask })
    }

    /// Mask-only prior; the fluorescence channel equals the mask.
    pub fn from_mask(height: usize, width: usize, mask: Vec<f64>) -> Result<Self> {
        Self::new(height, width, mask.clone(), mask)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn fluorescence(&self) -> &[f64] {
        &self.fluorescence
    }

    pub fn mask(&self) -> &[f64] {
        &self.mask
    }

    pub fn mask_foreground(&self) -> usize {
        self.mask.iter().filter(|&&v| v > 0.5).count()
    }
}

/// One dataset entry: a 2D prior, an optional ground-truth volume, a class
/// label, and a cross-validation fold index.
#[derive(Debug, Clone)]
pub struct Sample {
    pub id: String,
    pub prior: Prior2D,
    pub target: Option<VoxelGrid>,
    pub class_label: String,
    pub fold: usize,
}

impl Sample {
    pub fn new(
        id: impl Into<String>,
        prior: Prior2D,
        target: Option<VoxelGrid>,
        class_label: impl Into<String>,
        fold: usize,
    ) -> Result<Self> {
        if let Some(t) = &target {
            if t.height() != prior.height() || t.width() != prior.width() {
                return Err(Error::DimMismatch);
            }
        }
        Ok(Self {
            id: id.into(),
            prior,
            target,
            class_label: class_label.into(),
            fold,
        })
    }

    pub fn target(&self) -> Result<&VoxelGrid> {
        self.target.as_ref().ok_or(Error::MissingTarget)
    }
}

/// One manifest row.
#[derive(Debug, Clone, PartialEq)]
pub struct ManifestRecord {
    pub id: String,
    pub voxel_path: String,
    pub prior_path: String,
    pub class: String,
    pub fold: usize,
}

/// Dataset manifest: the CSV index of sample files.
#[derive(Debug, Clone, Default)]
pub struct Manifest {
    pub records: Vec<ManifestRecord>,
}

impl Manifest {
    pub fn new(records: Vec<ManifestRecord>) -> Result<Self> {
        let m = Self { records };
        m.validate()?;
        Ok(m)
    }

    /// Ids must be unique; with five or more records every fold 0..=4 must
    /// occur at least once.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for r in &self.records {
            if !seen.insert(r.id.as_str()) {
                return Err(Error::DuplicateId(r.id.clone()));
            }
        }
        if self.records.len() >= 5 {
            for f in 0..5 {
                if !self.records.iter().any(|r| r.fold == f) {
                    return Err(Error::BadFormat(format!("fold {f} missing from manifest")));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// How the 2D prior is taken from a volume.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorMode {
    /// Slice at depth index `floor(depth / 2)`.
    CentralSlice,
}

/// Extract the 2D conditioning image from a binary volume.
///
/// The mask is the central slice of `grid`; the fluorescence channel is the
/// same slice of `intensity` when given (values clamped to `[0,1]`),
/// otherwise it equals the mask.
pub fn extract_prior(grid: &VoxelGrid, intensity: Option<&VoxelGrid>, mode: PriorMode) -> Result<Prior2D> {
    if !grid.is_binary() {
        return Err(Error::BadFormat("prior extraction needs a binary grid".into()));
    }
    let PriorMode::CentralSlice = mode;
    let (d, h, w) = grid.dims();
    let z = d / 2;
    let start = grid.idx(z, 0, 0);
    let mask: Vec<f64> = grid.values()[start..start + h * w].to_vec();
    if !mask.iter().any(|&v| v > 0.5) {
        return Err(Error::EmptySlice);
    }
    let fluorescence = match intensity {
        Some(g) => {
            if g.dims() != grid.dims() {
                return Err(Error::DimMismatch);
            }
            g.values()[start..start + h * w]
                .iter()
                .map(|v| v.clamp(0.0, 1.0))
                .collect()
        }
        None => mask.clone(),
    };
    Prior2D::new(h, w, fluorescence, mask)
}

/// Number of 6-connected foreground components.
pub fn component_count(grid: &VoxelGrid) -> usize {
    let mut labels = vec![false; grid.len()];
    let mut count = 0;
    for start in 0..grid.len() {
        if grid.values()[start] > 0.5 && !labels[start] {
            count += 1;
            flood(grid, start, &mut labels);
        }
    }
    count
}

/// Keep only the largest 6-connected foreground component. Ties break toward
/// the component discovered first in scan order.
pub fn largest_component(grid: &VoxelGrid) -> VoxelGrid {
    let mut best: Vec<usize> = Vec::new();
    let mut visited = vec![false; grid.len()];
    for start in 0..grid.len() {
        if grid.values()[start] > 0.5 && !visited[start] {
            let comp = flood(grid, start, &mut visited);
            if comp.len() > best.len() {
                best = comp;
            }
        }
    }
    let mut out = VoxelGrid::zeros(grid.dims());
    for i in best {
        out.values.lock_binary_set(i);
    }
    out
}

// Small helper so largest_component can write without dropping the binary flag.
trait BinarySet {
    fn lock_binary_set(&mut self, i: usize);
}

impl BinarySet for Vec<f64> {
    fn lock_binary_set(&mut self, i: usize) {
        self[i] = 1.0;
    }
}

fn flood(grid: &VoxelGrid, start: usize, visited: &mut [bool]) -> Vec<usize> {
    let (d, h, w) = grid.dims();
    let mut stack = vec![start];
    let mut comp = Vec::new();
    visited[start] = true;
    while let Some(i) = stack.pop() {
        comp.push(i);
        let z = i / (h * w);
        let y = (i / w) % h;
        let x = i % w;
        let mut push = |zz: usize, yy: usize, xx: usize| {
            let j = (zz * h + yy) * w + xx;
            if !visited[j] && grid.values()[j] > 0.5 {
                visited[j] = true;
                stack.push(j);
            }
        };
        if z > 0 {
            push(z - 1, y, x);
        }
        if z + 1 < d {
            push(z + 1, y, x);
        }
        if y > 0 {
            push(z, y - 1, x);
        }
        if y + 1 < h {
            push(z, y + 1, x);
        }
        if x > 0 {
            push(z, y, x - 1);
        }
        if x + 1 < w {
            push(z, y, x + 1);
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_construction_validates() {
        assert!(VoxelGrid::new((2, 2, 2), vec![0.0; 8]).is_ok());
        assert!(matches!(VoxelGrid::new((2, 2, 2), vec![0.0; 7]), Err(Error::DimMismatch)));
        assert!(VoxelGrid::new((2, 2, 2), vec![f64::NAN; 8]).is_err());
        assert!(VoxelGrid::new((0, 2, 2), vec![]).is_err());
        let g = VoxelGrid::new((2, 2, 2), vec![1.0; 8]).unwrap();
        assert!(g.is_binary());
        let g = VoxelGrid::new((2, 2, 2), vec![0.5; 8]).unwrap();
        assert!(!g.is_binary());
    }

    #[test]
    fn central_slice_is_floor_depth_half() {
        // 3x4x4 grid, only middle slice set
        let mut g = VoxelGrid::zeros((3, 4, 4));
        for y in 0..4 {
            for x in 0..4 {
                g.set(1, y, x, 1.0);
            }
        }
        let p = extract_prior(&g, None, PriorMode::CentralSlice).unwrap();
        assert_eq!(p.dims(), (4, 4));
        assert!(p.mask().iter().all(|&v| v == 1.0));
        assert_eq!(p.fluorescence(), p.mask());
    }

    #[test]
    fn empty_central_slice_is_an_error() {
        let mut g = VoxelGrid::zeros((3, 4, 4));
        g.set(0, 1, 1, 1.0);
        g.set(2, 1, 1, 1.0);
        assert!(matches!(
            extract_prior(&g, None, PriorMode::CentralSlice),
            Err(Error::EmptySlice)
        ));
    }

    #[test]
    fn central_slice_of_sphere_matches_analytic_disc() {
        // voxelized sphere r=6 centered in 16^3: central plane crosses the
        // center, so the mask must equal the r=6 disc of that plane.
        let n = 16usize;
        let c = (n as f64 - 1.0) / 2.0;
        let r = 6.0;
        let mut g = VoxelGrid::zeros((n, n, n));
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    let dz = z as f64 - c;
                    let dy = y as f64 - c;
                    let dx = x as f64 - c;
                    if (dz * dz + dy * dy + dx * dx).sqrt() <= r {
                        g.set(z, y, x, 1.0);
                    }
                }
            }
        }
        let p = extract_prior(&g, None, PriorMode::CentralSlice).unwrap();
        let zc = (n / 2) as f64 - c;
        for y in 0..n {
            for x in 0..n {
                let dy = y as f64 - c;
                let dx = x as f64 - c;
                let inside = (zc * zc + dy * dy + dx * dx).sqrt() <= r;
                assert_eq!(p.mask()[y * n + x] > 0.5, inside, "pixel ({y},{x})");
            }
        }
    }

    #[test]
    fn component_counting() {
        let mut g = VoxelGrid::zeros((4, 4, 4));
        g.set(0, 0, 0, 1.0);
        g.set(0, 0, 1, 1.0);
        g.set(3, 3, 3, 1.0);
        assert_eq!(component_count(&g), 2);
        let l = largest_component(&g);
        assert_eq!(l.count_foreground(), 2);
        assert_eq!(l.get(0, 0, 0), 1.0);
        assert_eq!(l.get(3, 3, 3), 0.0);
    }

    #[test]
    fn manifest_rejects_duplicate_ids_and_missing_folds() {
        let rec = |id: &str, fold| ManifestRecord {
            id: id.into(),
            voxel_path: format!("{id}.vox"),
            prior_path: format!("{id}_prior.vox"),
            class: "ball".into(),
            fold,
        };
        assert!(Manifest::new(vec![rec("a", 0), rec("a", 1)]).is_err());
        let m = Manifest::new(vec![rec("a", 0), rec("b", 1), rec("c", 2), rec("d", 3), rec("e", 4)]);
        assert!(m.is_ok());
        let m = Manifest::new(vec![rec("a", 0), rec("b", 0), rec("c", 0), rec("d", 0), rec("e", 0)]);
        assert!(m.is_err());
        // fewer than five records: fold coverage not required
        assert!(Manifest::new(vec![rec("a", 0), rec("b", 0)]).is_ok());
    }
}
