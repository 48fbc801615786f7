//! Joint-Gaussian bilateral filter for RGB images.

use super::KernelError;
use crate::color::{ColorSpaceTag, Pixel8};
use crate::raster::{reflect101, Image};

/// Edge-preserving smoothing: each output pixel is the weight-normalized
/// sum of window neighbors, with weights
/// `exp(-(dx^2 + dy^2) / (2 sigma_space^2)) * exp(-||dc||^2 / (2 sigma_color^2))`
/// where `||dc||` is the Euclidean distance in RGB. The window is
/// `diameter` pixels wide; borders reflect (reflect-101). The three
/// channels share one weight per neighbor.
pub fn bilateral_filter(
    img: &Image,
    diameter: usize,
    sigma_color: f64,
    sigma_space: f64,
) -> Result<Image, KernelError> {
    img.expect_space(ColorSpaceTag::Rgb)?;
    if diameter == 0 || diameter % 2 == 0 {
        return Err(KernelError::BadDiameter(diameter));
    }
    if sigma_color <= 0.0 || sigma_space <= 0.0 {
        return Err(KernelError::BadSigma);
    }

    let radius = (diameter / 2) as isize;
    let space_coeff = -0.5 / (sigma_space * sigma_space);
    let color_coeff = -0.5 / (sigma_color * sigma_color);

    // Spatial weights depend only on the offset; precompute the window.
    let w = 2 * radius as usize + 1;
    let mut space_w = vec![0.0f64; w * w];
    for dy in -radius..=radius {
        for dx in -radius..=radius {
            let idx = ((dy + radius) as usize) * w + (dx + radius) as usize;
            space_w[idx] = (((dx * dx + dy * dy) as f64) * space_coeff).exp();
        }
    }

    let (width, height) = (img.width(), img.height());
    let mut out = Vec::with_capacity(width * height);
    for y in 0..height {
        for x in 0..width {
            let center = img.get(x, y).as_f64();
            let mut sum = [0.0f64; 3];
            let mut norm = 0.0f64;
            for dy in -radius..=radius {
                let sy = reflect101(y as isize + dy, height);
                for dx in -radius..=radius {
                    let sx = reflect101(x as isize + dx, width);
                    let nb = img.get(sx, sy).as_f64();
                    let dc2 = (nb[0] - center[0]).powi(2)
                        + (nb[1] - center[1]).powi(2)
                        + (nb[2] - center[2]).powi(2);
                    let wgt = space_w[((dy + radius) as usize) * w + (dx + radius) as usize]
                        * (dc2 * color_coeff).exp();
                    norm += wgt;
                    for c in 0..3 {
                        sum[c] += wgt * nb[c];
                    }
                }
            }
            out.push(Pixel8([
                crate::color::quantize(sum[0] / norm),
                crate::color::quantize(sum[1] / norm),
                crate::color::quantize(sum[2] / norm),
            ]));
        }
    }
    Ok(Image::new(width, height, ColorSpaceTag::Rgb, out)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ColorSpaceTag::Rgb;
    use rand::{Rng, SeedableRng};

    #[test]
    fn constant_image_is_unchanged() {
        let img = Image::filled(6, 5, Rgb, Pixel8::new(42, 100, 200));
        let out = bilateral_filter(&img, 9, 75.0, 75.0).unwrap();
        assert_eq!(out, img);
    }

    #[test]
    fn small_sigma_color_preserves_bright_spot() {
        // A lone bright pixel on black: with a tight color sigma the
        // cross-color weights vanish and the spot survives.
        let mut img = Image::filled(5, 5, Rgb, Pixel8::new(0, 0, 0));
        img.set(2, 2, Pixel8::new(255, 255, 255));
        let out = bilateral_filter(&img, 5, 2.0, 75.0).unwrap();
        let spot = out.get(2, 2);
        for c in 0..3 {
            assert!(spot.0[c] >= 254, "spot blurred to {spot:?}");
        }
        assert_eq!(out.get(0, 0), Pixel8::new(0, 0, 0));
    }

    #[test]
    fn matches_naive_reference() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let data: Vec<Pixel8> = (0..49).map(|_| Pixel8::new(rng.gen(), rng.gen(), rng.gen())).collect();
            let img = Image::new(7, 7, Rgb, data).unwrap();
            let out = bilateral_filter(&img, 5, 75.0, 75.0).unwrap();

            // Naive O(n * d^2) double sum, written independently.
            for y in 0..7usize {
                for x in 0..7usize {
                    let c0 = img.get(x, y).as_f64();
                    let mut num = [0.0; 3];
                    let mut den = 0.0;
                    for dy in -2isize..=2 {
                        for dx in -2isize..=2 {
                            let sx = reflect101(x as isize + dx, 7);
                            let sy = reflect101(y as isize + dy, 7);
                            let nb = img.get(sx, sy).as_f64();
                            let d2 = (dx * dx + dy * dy) as f64;
                            let dc2: f64 = (0..3).map(|c| (nb[c] - c0[c]).powi(2)).sum();
                            let w = (-0.5 * d2 / (75.0 * 75.0)).exp()
                                * (-0.5 * dc2 / (75.0 * 75.0)).exp();
                            den += w;
                            for c in 0..3 {
                                num[c] += w * nb[c];
                            }
                        }
                    }
                    let want = Pixel8([
                        crate::color::quantize(num[0] / den),
                        crate::color::quantize(num[1] / den),
                        crate::color::quantize(num[2] / den),
                    ]);
                    assert_eq!(out.get(x, y), want, "at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let img = Image::filled(3, 3, Rgb, Pixel8::default());
        assert!(bilateral_filter(&img, 4, 75.0, 75.0).is_err());
        assert!(bilateral_filter(&img, 5, 0.0, 75.0).is_err());
        assert!(bilateral_filter(&img, 5, 75.0, -1.0).is_err());
    }
}
