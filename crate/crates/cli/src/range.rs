use std::str::FromStr;

/// `start:stop:step` with positive start and step and `stop >= start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FromStr for LambdaRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, step] = parts[..] else {
            return Err(format!("lambda range `{s}` is not start:stop:step"));
        };
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("`{t}` in lambda range `{s}` is not a number"))
        };
        let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
        if start <= 0.0 {
            return Err(format!("lambda range must start above zero, got {start}"));
        }
        if step <= 0.0 {
            return Err(format!("lambda step must be positive, got {step}"));
        }
        if stop < start {
            return Err(format!(
                "lambda range stops ({stop}) before it starts ({start})"
            ));
        }
        Ok(Self { start, stop, step })
    }
}

impl LambdaRange {
    /// Each value is computed from its index, not accumulated, and rounded
    /// to 12 decimals so 0.1 steps print cleanly.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| ((self.start + i as f64 * self.step) * 1e12).round() / 1e12)
            .collect()
    }
}
