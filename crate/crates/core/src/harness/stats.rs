//! Sample moments with an order-independent reduction.

/// Count, mean and sum of squared deviations of a batch.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Moments {
    pub count: u64,
    pub mean: f64,
    pub sq_dev: f64,
}

impl Moments {
    pub fn single(x: f64) -> Self {
        Moments {
            count: 1,
            mean: x,
            sq_dev: 0.0,
        }
    }

    /// Chan et al. parallel merge.
    pub fn merge(self, other: Moments) -> Moments {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let w = other.count as f64 / count as f64;
        Moments {
            count,
            mean: self.mean + delta * w,
            sq_dev: self.sq_dev + other.sq_dev + delta * delta * self.count as f64 * w,
        }
    }

    /// Reduces `values` by a balanced binary tree over index ranges, so the result
    /// only depends on the values and their order.
    pub fn of(values: &[f64]) -> Moments {
        match values.len() {
            0 => Moments::default(),
            1 => Moments::single(values[0]),
            len => {
                let (lo, hi) = values.split_at(len / 2);
                Moments::of(lo).merge(Moments::of(hi))
            }
        }
    }

    /// Sample (n - 1) standard deviation; zero for a single value.
    pub fn std_dev(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            (self.sq_dev / (self.count - 1) as f64).sqrt()
        }
    }

    /// Standard error of the mean.
    pub fn stderr(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.std_dev() / (self.count as f64).sqrt()
        }
    }
}

/// `(mean - exact) / stderr`; undefined for a zero standard error.
pub fn z_score(mean: f64, stderr: f64, exact: f64) -> Option<f64> {
    (stderr > 0.0).then(|| (mean - exact) / stderr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_two_pass() {
        let xs: Vec<f64> = (0..37).map(|i| ((i * 7919) % 101) as f64 / 13.0).collect();
        let m = Moments::of(&xs);
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (xs.len() - 1) as f64;
        assert_eq!(m.count, 37);
        assert!((m.mean - mean).abs() < 1e-12);
        assert!((m.std_dev() - var.sqrt()).abs() < 1e-12);
        assert!((m.stderr() - var.sqrt() / 37f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_cases() {
        assert_eq!(Moments::of(&[]).stderr(), 0.0);
        let one = Moments::of(&[2.5]);
        assert_eq!((one.mean, one.stderr()), (2.5, 0.0));
        assert_eq!(Moments::of(&[1.0, 1.0, 1.0]).stderr(), 0.0);
        assert_eq!(z_score(1.0, 0.0, 0.5), None);
        assert_eq!(z_score(1.5, 0.25, 0.5), Some(4.0));
    }
}
