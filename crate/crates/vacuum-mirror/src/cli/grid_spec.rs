//! Frequency grid specification `min:max:points[:log|lin]`.
//!
//! Log spacing is the default and requires positive endpoints. A
//! one-point grid must have min == max and may sit anywhere, including at
//! or below zero (spectra are defined there; they evaluate to 0).

use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Log,
    Lin,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub scale: GridScale,
}

impl GridSpec {
    pub fn materialize(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.min];
        }
        let n = self.points;
        match self.scale {
            GridScale::Log => crate::spectra::log_grid(self.min, self.max, n),
            GridScale::Lin => {
                let step = (self.max - self.min) / (n - 1) as f64;
                (0..n)
                    .map(|i| {
                        if i + 1 == n {
                            self.max
                        } else {
                            self.min + step * i as f64
                        }
                    })
                    .collect()
            }
        }
    }

    /// Canonical `min:max:points:scale` form for parameter echoes.
    pub fn canonical(&self) -> String {
        let scale = match self.scale {
            GridScale::Log => "log",
            GridScale::Lin => "lin",
        };
        format!("{}:{}:{}:{}", self.min, self.max, self.points, scale)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 3 || parts.len() > 4 {
            return Err(format!("grid '{s}' must be min:max:points[:log|lin]"));
        }
        let min: f64 = parts[0]
            .parse()
            .map_err(|_| format!("grid minimum '{}' is not a number", parts[0]))?;
        let max: f64 = parts[1]
            .parse()
            .map_err(|_| format!("grid maximum '{}' is not a number", parts[1]))?;
        let points: usize = parts[2]
            .parse()
            .map_err(|_| format!("grid point count '{}' is not an integer", parts[2]))?;
        let scale = match parts.get(3).copied().unwrap_or("log") {
            "log" => GridScale::Log,
            "lin" => GridScale::Lin,
            other => return Err(format!("grid scale '{other}' must be log or lin")),
        };
        if !min.is_finite() || !max.is_finite() {
            return Err(format!("grid endpoints in '{s}' must be finite"));
        }
        if points == 0 {
            return Err("grid needs at least one point".to_string());
        }
        if points == 1 {
            if min != max {
                return Err(format!("a one-point grid needs min == max, got '{s}'"));
            }
            return Ok(Self {
                min,
                max,
                points,
                scale,
            });
        }
        if max.is_nan() || max <= min {
            return Err(format!("grid needs max > min, got '{s}'"));
        }
        if scale == GridScale::Log && min <= 0.0 {
            return Err(format!(
                "log grids exclude nonpositive endpoints, got '{s}' (use :lin)"
            ));
        }
        Ok(Self {
            min,
            max,
            points,
            scale,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_and_default_scale() {
        let g: GridSpec = "0.001:1000:400".parse().unwrap();
        assert_eq!(g.scale, GridScale::Log);
        assert_eq!(g.points, 400);
        let g: GridSpec = "-1:1:3:lin".parse().unwrap();
        assert_eq!(g.materialize(), vec![-1.0, 0.0, 1.0]);
    }

    #[test]
    fn single_point_grids_are_degenerate() {
        let g: GridSpec = "0:0:1".parse().unwrap();
        assert_eq!(g.materialize(), vec![0.0]);
        assert!("0:1:1".parse::<GridSpec>().is_err());
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!("0:10".parse::<GridSpec>().is_err());
        assert!("a:b:c".parse::<GridSpec>().is_err());
        assert!("1:0:5".parse::<GridSpec>().is_err());
        assert!("0:10:5:log".parse::<GridSpec>().is_err());
        assert!("0:10:5:weird".parse::<GridSpec>().is_err());
        assert!("1:2:0".parse::<GridSpec>().is_err());
    }

    #[test]
    fn log_grid_hits_both_endpoints() {
        let g: GridSpec = "0.1:10:21:log".parse().unwrap();
        let pts = g.materialize();
        assert_eq!(pts.len(), 21);
        assert_eq!(pts[0], 0.1);
        assert_eq!(pts[20], 10.0);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_echo_reparses_identically() {
        let g: GridSpec = "0.001:1000:400".parse().unwrap();
        let again: GridSpec = g.canonical().parse().unwrap();
        assert_eq!(g, again);
    }
}
