//! Labeled sample container, class summaries, and Gram computation.
//!
//! Samples are stored column-major: `dim` rows (features) by `len`
//! columns (samples), so the Gram matrix reduces to column dot products
//! and a class mean to a column average. The layout never materializes
//! a `dim x dim` covariance matrix; only covariance *traces* are needed
//! anywhere downstream, and those are accumulated feature-wise in
//! `O(dim * n)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};

/// Column-major feature matrix with one class id per column.
///
/// Class ids are dense and zero-based. `class_names` records the
/// external labels in first-appearance order, so id `i` displays as
/// `class_names[i]`. Binary problems map class 0 to the negative label
/// side and class 1 to the positive side.
///
/// The container is immutable after construction and safe to share
/// across threads.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LabeledDataset {
    dim: usize,
    features: Vec<f64>,
    labels: Vec<usize>,
    class_names: Vec<String>,
    class_sizes: Vec<usize>,
}

/// Per-class first and second moment summary.
///
/// `cov_trace` is the trace of the unbiased sample covariance (divisor
/// `n - 1`) accumulated feature-wise.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassSummary {
    pub mean: Vec<f64>,
    pub cov_trace: f64,
    pub size: usize,
}

/// Symmetric matrix of pairwise sample inner products.
#[derive(Debug, Clone, PartialEq)]
pub struct Gram {
    n: usize,
    data: Vec<f64>,
}

impl Gram {
    /// Number of samples (matrix order).
    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `(j, k)`.
    #[inline]
    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.data[j * self.n + k]
    }

    /// Row `j` as a slice.
    #[inline]
    pub fn row(&self, j: usize) -> &[f64] {
        &self.data[j * self.n..(j + 1) * self.n]
    }
}

impl LabeledDataset {
    /// Build a dataset from a column-major feature matrix, per-column
    /// class ids, and class display names.
    ///
    /// Classes listed in `class_names` may be empty (a held-out test
    /// split can lack a class); operations that need samples report
    /// `MissingClass` or `SingletonClass` at use.
    pub fn new(
        dim: usize,
        features: Vec<f64>,
        labels: Vec<usize>,
        class_names: Vec<String>,
    ) -> Result<Self> {
        let samples = labels.len();
        if features.len() != dim * samples {
            return Err(Error::LabelCountMismatch {
                labels: samples,
                samples: if dim == 0 { 0 } else { features.len() / dim },
            });
        }
        if let Some(idx) = features.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteFeature {
                row: idx % dim,
                col: idx / dim,
            });
        }
        let classes = class_names.len();
        let mut class_sizes = vec![0usize; classes];
        for &label in &labels {
            if label >= classes {
                return Err(Error::LabelOutOfRange { label, classes });
            }
            class_sizes[label] += 1;
        }
        Ok(Self {
            dim,
            features,
            labels,
            class_names,
            class_sizes,
        })
    }

    /// Like [`LabeledDataset::new`] with class names `"1"`, `"2"`, ...
    /// inferred from the largest label. Every class must be populated.
    pub fn with_default_names(dim: usize, features: Vec<f64>, labels: Vec<usize>) -> Result<Self> {
        let classes = labels.iter().max().map_or(0, |&m| m + 1);
        let names = (1..=classes).map(|i| format!("{i}")).collect();
        let ds = Self::new(dim, features, labels, names)?;
        if let Some(class) = ds.class_sizes.iter().position(|&n| n == 0) {
            return Err(Error::EmptyClass { class });
        }
        Ok(ds)
    }

    /// Build from per-class column blocks: block `i` holds the
    /// column-major samples of class `i`.
    pub fn from_class_blocks(dim: usize, blocks: &[Vec<f64>]) -> Result<Self> {
        let mut features = Vec::new();
        let mut labels = Vec::new();
        for (class, block) in blocks.iter().enumerate() {
            if dim == 0 || block.len() % dim != 0 {
                return Err(Error::LabelCountMismatch {
                    labels: 0,
                    samples: block.len(),
                });
            }
            features.extend_from_slice(block);
            labels.extend(core::iter::repeat(class).take(block.len() / dim));
        }
        Self::with_default_names(dim, features, labels)
    }

    /// Feature dimension `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of samples `N`.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True when the dataset holds no samples.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Number of declared classes `g`.
    pub fn n_classes(&self) -> usize {
        self.class_names.len()
    }

    /// Class id per column.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Samples per class.
    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Display names in class-id order.
    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    /// Column `j` as a feature slice.
    #[inline]
    pub fn column(&self, j: usize) -> &[f64] {
        &self.features[j * self.dim..(j + 1) * self.dim]
    }

    /// Raw column-major feature storage.
    pub fn features(&self) -> &[f64] {
        &self.features
    }

    /// Indices of the columns belonging to `class`.
    pub fn class_columns(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == class)
            .map(|(j, _)| j)
    }

    /// Signed labels for the binary problem: class 0 -> -1, class 1 -> +1.
    pub fn signed_labels(&self) -> Result<Vec<f64>> {
        if self.n_classes() != 2 {
            return Err(Error::NotBinary {
                classes: self.n_classes(),
            });
        }
        Ok(self
            .labels
            .iter()
            .map(|&l| if l == 0 { -1.0 } else { 1.0 })
            .collect())
    }

    /// Pairwise inner products of all sample columns.
    ///
    /// The result is symmetric positive semidefinite by construction.
    pub fn gram_matrix(&self) -> Gram {
        let n = self.len();
        let mut data = vec![0.0; n * n];
        for j in 0..n {
            let xj = self.column(j);
            for k in j..n {
                let dot = dot(xj, self.column(k));
                data[j * n + k] = dot;
                data[k * n + j] = dot;
            }
        }
        Gram { n, data }
    }

    /// Mean vector and covariance trace of one class.
    ///
    /// The trace uses the unbiased per-feature sample variance, so the
    /// class needs at least two samples.
    pub fn class_summary(&self, class: usize) -> Result<ClassSummary> {
        if class >= self.n_classes() {
            return Err(Error::MissingClass { class });
        }
        let size = self.class_sizes[class];
        if size < 2 {
            return Err(Error::SingletonClass { class });
        }
        let mut mean = vec![0.0; self.dim];
        for j in self.class_columns(class) {
            for (m, v) in mean.iter_mut().zip(self.column(j)) {
                *m += v;
            }
        }
        for m in mean.iter_mut() {
            *m /= size as f64;
        }
        let mut trace = 0.0;
        for j in self.class_columns(class) {
            for (m, v) in mean.iter().zip(self.column(j)) {
                let c = v - m;
                trace += c * c;
            }
        }
        trace /= (size - 1) as f64;
        Ok(ClassSummary {
            mean,
            cov_trace: trace,
            size,
        })
    }

    /// Split into training and test sets by drawing `train_sizes[i]`
    /// columns per class uniformly without replacement.
    ///
    /// Per class, train and test indices partition the class; both
    /// outputs keep columns in ascending original order, so a fixed RNG
    /// state reproduces the split exactly.
    pub fn split_train_test(
        &self,
        train_sizes: &[usize],
        rng: &mut (impl Rng + ?Sized),
    ) -> Result<(Self, Self)> {
        if train_sizes.len() != self.n_classes() {
            return Err(Error::LabelCountMismatch {
                labels: train_sizes.len(),
                samples: self.n_classes(),
            });
        }
        let mut train_idx = Vec::new();
        let mut test_idx = Vec::new();
        for (class, &want) in train_sizes.iter().enumerate() {
            let available = self.class_sizes[class];
            if want < 2 {
                return Err(Error::TrainSizeTooSmall {
                    class,
                    requested: want,
                });
            }
            if want > available {
                return Err(Error::SizeExceedsClass {
                    class,
                    requested: want,
                    available,
                });
            }
            let mut idx: Vec<usize> = self.class_columns(class).collect();
            // Partial Fisher-Yates: the first `want` entries are a
            // uniform without-replacement draw.
            for k in 0..want {
                let pick = k + rng.random_range(0..idx.len() - k);
                idx.swap(k, pick);
            }
            let (chosen, rest) = idx.split_at(want);
            train_idx.extend_from_slice(chosen);
            test_idx.extend_from_slice(rest);
        }
        train_idx.sort_unstable();
        test_idx.sort_unstable();
        Ok((self.subset(&train_idx), self.subset(&test_idx)))
    }

    /// Dataset restricted to the given column indices (class names kept).
    pub fn subset(&self, indices: &[usize]) -> Self {
        let mut features = Vec::with_capacity(indices.len() * self.dim);
        let mut labels = Vec::with_capacity(indices.len());
        for &j in indices {
            features.extend_from_slice(self.column(j));
            labels.push(self.labels[j]);
        }
        let mut class_sizes = vec![0usize; self.n_classes()];
        for &l in &labels {
            class_sizes[l] += 1;
        }
        Self {
            dim: self.dim,
            features,
            labels,
            class_names: self.class_names.clone(),
            class_sizes,
        }
    }

    /// Two-class view of classes `a` and `b` with local ids 0 and 1.
    ///
    /// Used by one-versus-one training; the caller records the mapping.
    pub fn binary_view(&self, a: usize, b: usize) -> Result<Self> {
        for &c in &[a, b] {
            if c >= self.n_classes() || self.class_sizes[c] == 0 {
                return Err(Error::MissingClass { class: c });
            }
        }
        let mut features = Vec::new();
        let mut labels = Vec::new();
        for (j, &l) in self.labels.iter().enumerate() {
            let local = if l == a {
                0
            } else if l == b {
                1
            } else {
                continue;
            };
            features.extend_from_slice(self.column(j));
            labels.push(local);
        }
        Self::new(
            self.dim,
            features,
            labels,
            vec![self.class_names[a].clone(), self.class_names[b].clone()],
        )
    }
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn two_column_dataset(cols: &[&[f64]], labels: &[usize]) -> LabeledDataset {
        let dim = cols[0].len();
        let mut features = Vec::new();
        for c in cols {
            features.extend_from_slice(c);
        }
        LabeledDataset::with_default_names(dim, features, labels.to_vec()).unwrap()
    }

    #[test]
    fn gram_orthonormal_columns() {
        let ds = two_column_dataset(&[&[1.0, 0.0], &[0.0, 1.0]], &[0, 1]);
        let g = ds.gram_matrix();
        assert_eq!(g.get(0, 0), 1.0);
        assert_eq!(g.get(0, 1), 0.0);
        assert_eq!(g.get(1, 0), 0.0);
        assert_eq!(g.get(1, 1), 1.0);
    }

    #[test]
    fn gram_antipodal_pair() {
        let ds = two_column_dataset(&[&[-1.0, 0.0], &[1.0, 0.0]], &[0, 1]);
        let g = ds.gram_matrix();
        assert_eq!(g.get(0, 0), 1.0);
        assert_eq!(g.get(0, 1), -1.0);
        assert_eq!(g.get(1, 1), 1.0);
    }

    #[test]
    fn gram_matches_double_loop_oracle() {
        // Four fixed integer columns in d = 3.
        let cols: [&[f64]; 4] = [
            &[1.0, -2.0, 3.0],
            &[0.0, 4.0, -1.0],
            &[2.0, 2.0, 2.0],
            &[-3.0, 0.0, 5.0],
        ];
        let ds = two_column_dataset(&cols, &[0, 0, 1, 1]);
        let g = ds.gram_matrix();
        for j in 0..4 {
            for k in 0..4 {
                let mut expect = 0.0;
                for r in 0..3 {
                    expect += cols[j][r] * cols[k][r];
                }
                assert_eq!(g.get(j, k), expect, "entry ({j},{k})");
            }
        }
    }

    #[test]
    fn class_summary_hand_variance() {
        // One feature, samples {0, 2}: mean 1, unbiased variance 2.
        let ds = two_column_dataset(&[&[0.0], &[2.0], &[5.0], &[6.0]], &[0, 0, 1, 1]);
        let s = ds.class_summary(0).unwrap();
        assert_eq!(s.mean, vec![1.0]);
        assert_eq!(s.cov_trace, 2.0);
        assert_eq!(s.size, 2);
    }

    #[test]
    fn class_summary_identical_samples() {
        let ds = two_column_dataset(&[&[3.0, -1.0], &[3.0, -1.0], &[0.0, 0.0]], &[0, 0, 1]);
        let s = ds.class_summary(0).unwrap();
        assert_eq!(s.cov_trace, 0.0);
    }

    #[test]
    fn class_summary_trace_matches_dense_covariance() {
        // Five fixed samples in d = 4 against an explicitly formed
        // covariance matrix.
        let cols: [&[f64]; 5] = [
            &[0.5, -1.0, 2.0, 0.0],
            &[1.5, 0.0, -2.0, 3.0],
            &[-0.5, 2.0, 1.0, 1.0],
            &[2.5, 1.0, 0.0, -1.0],
            &[1.0, -2.0, 3.0, 2.0],
        ];
        let mut ds_cols: Vec<&[f64]> = cols.to_vec();
        ds_cols.push(&[0.0, 0.0, 0.0, 0.0]);
        ds_cols.push(&[0.0, 0.0, 0.0, 0.0]);
        let ds = two_column_dataset(&ds_cols, &[0, 0, 0, 0, 0, 1, 1]);
        let s = ds.class_summary(0).unwrap();

        let n = 5;
        let d = 4;
        let mut mean = vec![0.0; d];
        for c in &cols {
            for (m, v) in mean.iter_mut().zip(c.iter()) {
                *m += v / n as f64;
            }
        }
        let mut cov = vec![vec![0.0; d]; d];
        for c in &cols {
            for r in 0..d {
                for q in 0..d {
                    cov[r][q] += (c[r] - mean[r]) * (c[q] - mean[q]) / (n - 1) as f64;
                }
            }
        }
        let trace: f64 = (0..d).map(|r| cov[r][r]).sum();
        assert!((s.cov_trace - trace).abs() < 1e-12);
    }

    #[test]
    fn singleton_class_rejected() {
        let ds = two_column_dataset(&[&[0.0], &[1.0], &[2.0]], &[0, 1, 1]);
        assert_eq!(
            ds.class_summary(0),
            Err(Error::SingletonClass { class: 0 })
        );
    }

    #[test]
    fn split_full_class_leaves_empty_test() {
        let ds = two_column_dataset(&[&[0.0], &[1.0], &[2.0], &[3.0]], &[0, 0, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (train, test) = ds.split_train_test(&[2, 2], &mut rng).unwrap();
        assert_eq!(train.len(), 4);
        assert_eq!(test.len(), 0);
    }

    #[test]
    fn split_sizes_match_protocol() {
        // Class sizes (40, 22) with training sizes (10, 10) leave test
        // sizes (30, 12).
        let mut features = Vec::new();
        let mut labels = Vec::new();
        for j in 0..62 {
            features.push(j as f64);
            labels.push(usize::from(j >= 40));
        }
        let ds = LabeledDataset::with_default_names(1, features, labels).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let (train, test) = ds.split_train_test(&[10, 10], &mut rng).unwrap();
        assert_eq!(train.class_sizes(), &[10, 10]);
        assert_eq!(test.class_sizes(), &[30, 12]);
    }

    #[test]
    fn split_deterministic_under_fixed_seed() {
        let ds = two_column_dataset(
            &[&[0.0], &[1.0], &[2.0], &[3.0], &[4.0], &[5.0]],
            &[0, 0, 0, 1, 1, 1],
        );
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        let (tr_a, te_a) = ds.split_train_test(&[2, 2], &mut a).unwrap();
        let (tr_b, te_b) = ds.split_train_test(&[2, 2], &mut b).unwrap();
        assert_eq!(tr_a, tr_b);
        assert_eq!(te_a, te_b);
    }

    #[test]
    fn split_rejects_oversized_request() {
        let ds = two_column_dataset(&[&[0.0], &[1.0], &[2.0], &[3.0]], &[0, 0, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(
            ds.split_train_test(&[3, 2], &mut rng).unwrap_err(),
            Error::SizeExceedsClass {
                class: 0,
                requested: 3,
                available: 2
            }
        );
    }

    #[test]
    fn non_finite_feature_rejected() {
        let err =
            LabeledDataset::with_default_names(2, vec![0.0, f64::NAN, 1.0, 2.0], vec![0, 1])
                .unwrap_err();
        assert_eq!(err, Error::NonFiniteFeature { row: 1, col: 0 });
    }

    #[test]
    fn binary_view_relabels_pair() {
        let ds = two_column_dataset(
            &[&[0.0], &[1.0], &[2.0], &[3.0], &[4.0], &[5.0]],
            &[0, 0, 1, 1, 2, 2],
        );
        let view = ds.binary_view(1, 2).unwrap();
        assert_eq!(view.len(), 4);
        assert_eq!(view.labels(), &[0, 0, 1, 1]);
        assert_eq!(view.class_names(), &["2".to_string(), "3".to_string()]);
    }
}
