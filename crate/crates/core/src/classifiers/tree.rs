use ndarray::ArrayView2;
use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use super::{finalize_probabilities, ProbabilisticClassifier};
use crate::rng::Rng;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeParams {
    pub max_depth: usize,
    pub min_samples_leaf: usize,
}

impl Default for TreeParams {
    fn default() -> Self {
        Self {
            max_depth: 8,
            min_samples_leaf: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
enum Node {
    Leaf {
        distribution: Vec<f64>,
    },
    Split {
        feature: usize,
        threshold: f64,
        left: usize,
        right: usize,
    },
}

/// CART classification tree with gini impurity. A sample goes left when
/// `x[feature] <= threshold`. Among equally good splits the lowest feature
/// index wins, then the lowest threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionTree {
    nodes: Vec<Node>,
    n_features: usize,
    n_classes: usize,
}

/// Per-node random feature subsets, used by the forest.
pub(super) struct FeatureSampler<'a> {
    pub rng: &'a mut Rng,
    pub max_features: usize,
}

struct Grower<'x, 'a, 'r> {
    x: ArrayView2<'x, f64>,
    y: &'a [usize],
    n_classes: usize,
    params: &'a TreeParams,
    sampler: Option<FeatureSampler<'r>>,
    nodes: Vec<Node>,
}

fn sum_sq_over_n(counts: &[usize], n: usize) -> f64 {
    counts.iter().map(|&c| (c * c) as f64).sum::<f64>() / n as f64
}

impl Grower<'_, '_, '_> {
    fn leaf(&mut self, counts: &[usize], n: usize) -> usize {
        let distribution = counts.iter().map(|&c| c as f64 / n as f64).collect();
        self.nodes.push(Node::Leaf { distribution });
        self.nodes.len() - 1
    }

    fn candidate_features(&mut self) -> Vec<usize> {
        let a = self.x.ncols();
        match self.sampler.as_mut() {
            Some(s) if s.max_features < a => {
                let mut f = sample(s.rng, a, s.max_features).into_vec();
                f.sort_unstable();
                f
            }
            _ => (0..a).collect(),
        }
    }

    /// Best `(feature, threshold)` by weighted gini, if any split improves on the parent.
    fn best_split(&mut self, samples: &[usize], parent: &[usize]) -> Option<(usize, f64)> {
        let n = samples.len();
        let min_leaf = self.params.min_samples_leaf.max(1);
        let parent_score = sum_sq_over_n(parent, n);
        let mut best: Option<(f64, usize, f64)> = None;
        let mut pairs: Vec<(f64, usize)> = Vec::with_capacity(n);
        for f in self.candidate_features() {
            pairs.clear();
            pairs.extend(samples.iter().map(|&i| (self.x[[i, f]], self.y[i])));
            pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut left = vec![0usize; self.n_classes];
            let mut right = parent.to_vec();
            for p in 1..n {
                let (v_prev, k) = pairs[p - 1];
                left[k] += 1;
                right[k] -= 1;
                let v = pairs[p].0;
                if p < min_leaf || n - p < min_leaf || v_prev >= v {
                    continue;
                }
                // maximizing this is minimizing weighted child gini
                let score = sum_sq_over_n(&left, p) + sum_sq_over_n(&right, n - p);
                if best.is_none_or(|(s, _, _)| score > s) {
                    let mut threshold = 0.5 * (v_prev + v);
                    if threshold >= v {
                        threshold = v_prev;
                    }
                    best = Some((score, f, threshold));
                }
            }
        }
        best.filter(|(s, _, _)| *s > parent_score + 1e-12 * n as f64)
            .map(|(_, f, t)| (f, t))
    }

    fn grow(&mut self, samples: Vec<usize>, depth: usize) -> usize {
        let n = samples.len();
        let mut counts = vec![0usize; self.n_classes];
        for &i in &samples {
            counts[self.y[i]] += 1;
        }
        let pure = counts.iter().filter(|&&c| c > 0).count() <= 1;
        if pure || depth >= self.params.max_depth || n < 2 * self.params.min_samples_leaf.max(1) {
            return self.leaf(&counts, n);
        }
        let Some((feature, threshold)) = self.best_split(&samples, &counts) else {
            return self.leaf(&counts, n);
        };
        let (l, r): (Vec<usize>, Vec<usize>) = samples.into_iter().partition(|&i| self.x[[i, feature]] <= threshold);
        let at = self.nodes.len();
        self.nodes.push(Node::Leaf {
            distribution: Vec::new(),
        });
        let left = self.grow(l, depth + 1);
        let right = self.grow(r, depth + 1);
        self.nodes[at] = Node::Split {
            feature,
            threshold,
            left,
            right,
        };
        at
    }
}

impl DecisionTree {
    pub(super) fn fit(p: &TreeParams, x: ArrayView2<'_, f64>, y: &[usize], n_classes: usize) -> Self {
        Self::grow(p, x, y, n_classes, (0..y.len()).collect(), None)
    }

    /// Grow on `samples` (row indices, repeats allowed for bootstrap draws).
    pub(super) fn grow(
        p: &TreeParams,
        x: ArrayView2<'_, f64>,
        y: &[usize],
        n_classes: usize,
        samples: Vec<usize>,
        sampler: Option<FeatureSampler<'_>>,
    ) -> Self {
        let mut g = Grower {
            x,
            y,
            n_classes,
            params: p,
            sampler,
            nodes: Vec::new(),
        };
        g.grow(samples, 0);
        Self {
            nodes: g.nodes,
            n_features: x.ncols(),
            n_classes,
        }
    }

    /// Class frequencies of the leaf `x` falls into.
    pub(super) fn leaf_distribution(&self, x: &[f64]) -> &[f64] {
        let mut at = 0;
        loop {
            match &self.nodes[at] {
                Node::Leaf { distribution } => return distribution,
                Node::Split {
                    feature,
                    threshold,
                    left,
                    right,
                } => at = if x[*feature] <= *threshold { *left } else { *right },
            }
        }
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn depth(&self) -> usize {
        fn walk(nodes: &[Node], at: usize) -> usize {
            match &nodes[at] {
                Node::Leaf { .. } => 0,
                Node::Split { left, right, .. } => 1 + walk(nodes, *left).max(walk(nodes, *right)),
            }
        }
        walk(&self.nodes, 0)
    }
}

impl ProbabilisticClassifier for DecisionTree {
    fn n_classes(&self) -> usize {
        self.n_classes
    }

    fn n_features(&self) -> usize {
        self.n_features
    }

    fn predict_proba_unchecked(&self, x: &[f64]) -> Vec<f64> {
        finalize_probabilities(self.leaf_distribution(x).to_vec())
    }
}
