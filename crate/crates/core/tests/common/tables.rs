//! Reference coupling tables, transcribed as printed: (N, m, n, p, D, α).

/// First-kind rows.
pub const FIRST_KIND: &[(usize, usize, usize, usize, f64, f64)] = &[
    (6, 3, 6, 3, 2.8395e-4, 0.11575),
    (7, 4, 7, 3, 5.4794e-4, 0.087700),
    (8, 3, 8, 3, 3.1152e-06, 0.062943),
    (8, 4, 8, 4, 1.0031e-3, 0.069797),
    (8, 5, 8, 3, 7.4469e-4, 0.068879),
    (9, 3, 9, 4, 5.7509e-06, 0.054162),
    (9, 4, 9, 3, 5.7509e-06, 0.049960),
    (9, 5, 9, 4, 1.2967e-3, 0.056583),
    (9, 6, 9, 3, 8.8502e-4, 0.055637),
    (10, 3, 10, 3, 5.9416e-08, 0.035465),
    (10, 3, 10, 5, 7.3591e-06, 0.046313),
    (10, 4, 10, 4, 1.0248e-05, 0.044211),
    (10, 5, 10, 3, 7.3591e-06, 0.040715),
    (10, 5, 10, 5, 1.5984e-3, 0.047291),
    (10, 6, 10, 4, 1.4703e-3, 0.046822),
    (10, 7, 10, 3, 9.8451e-4, 0.045964),
];

/// Second-kind rows. The N=10 row {10,5,7} is printed twice.
pub const SECOND_KIND: &[(usize, usize, usize, usize, f64, f64)] = &[
    (2, 2, 2, 2, -1.1225, 0.57143),
    (3, 3, 2, 3, -1.5754, 0.30917),
    (3, 3, 3, 2, -1.5754, 0.31746),
    (4, 3, 3, 4, -1.8332, 0.21132),
    (4, 4, 2, 4, -1.9493, 0.19337),
    (4, 4, 3, 3, -1.8332, 0.20560),
    (4, 4, 4, 2, -1.9493, 0.20391),
    (4, 4, 4, 4, 2.1084, 0.15429),
    (5, 4, 3, 5, -1.9683, 0.14895),
    (5, 4, 4, 4, -0.89355, 0.15387),
    (5, 5, 2, 5, -2.2887, 0.13340),
    (5, 5, 3, 4, -1.9683, 0.14187),
    (5, 5, 4, 3, -1.9683, 0.14619),
    (5, 5, 4, 5, 3.1611, 0.11561),
    (5, 5, 5, 2, -2.2887, 0.14311),
    (5, 5, 5, 4, 3.1611, 0.11668),
    (6, 4, 4, 6, -1.8850, 0.11439),
    (6, 5, 3, 6, -2.0625, 0.10985),
    (6, 5, 4, 5, 8.1287e-2, 0.11527),
    (6, 5, 5, 6, 4.2528, 0.092393),
    (6, 6, 2, 6, -2.6084, 0.098229),
    (6, 6, 3, 5, -2.0625, 0.10398),
    (6, 6, 4, 4, -1.8850, 0.10784),
    (6, 6, 4, 6, 4.0185, 0.088947),
    (6, 6, 5, 3, -2.0625, 0.10937),
    (6, 6, 5, 5, 4.2528, 0.091510),
    (6, 6, 6, 2, -2.6084, 0.10658),
    (6, 6, 6, 4, 4.0185, 0.091151),
    (6, 6, 6, 6, -2.3706, 0.075762),
    (7, 6, 3, 7, -2.1382, 0.084291),
    (7, 6, 5, 7, 4.9336, 0.074398),
    (7, 6, 6, 6, 4.3077, 0.075526),
    (7, 7, 2, 7, -2.9149, 0.075728),
    (7, 7, 3, 4, 5.4794e-4, 0.088234),
    (7, 7, 3, 6, -2.1382, 0.079773),
    (7, 7, 4, 5, -1.7957, 0.082749),
    (7, 7, 4, 7, 4.7748, 0.070376),
    (7, 7, 5, 4, -1.7957, 0.084569),
    (7, 7, 5, 6, 4.9336, 0.072836),
    (7, 7, 6, 3, -2.1382, 0.085059),
    (7, 7, 6, 5, 4.9336, 0.074000),
    (7, 7, 6, 7, -3.8751, 0.062565),
    (7, 7, 7, 2, -2.9149, 0.082796),
    (7, 7, 7, 4, 4.7748, 0.073152),
    (7, 7, 7, 6, -3.8751, 0.062861),
    (8, 6, 6, 8, 5.2871, 0.062147),
    (8, 7, 3, 8, -2.2035, 0.066792),
    (8, 7, 5, 8, 5.4173, 0.060792),
    (8, 7, 6, 7, 3.6190, 0.062378),
    (8, 7, 7, 6, 3.6190, 0.062674),
    (8, 7, 7, 8, -5.8640, 0.053277),
    (8, 8, 2, 8, -3.2119, 0.060393),
    (8, 8, 3, 5, 7.4469e-4, 0.069615),
    (8, 8, 3, 7, -2.2035, 0.063341),
    (8, 8, 4, 6, -1.7158, 0.065623),
    (8, 8, 4, 8, 5.4691, 0.057068),
    (8, 8, 5, 5, -1.5767, 0.067200),
    (8, 8, 5, 7, 5.4173, 0.059134),
    (8, 8, 6, 4, -1.7158, 0.068081),
    (8, 8, 6, 6, 5.2871, 0.060526),
    (8, 8, 6, 8, -5.1946, 0.052159),
    (8, 8, 7, 3, -2.2035, 0.068170),
    (8, 8, 7, 5, 5.4173, 0.061000),
    (8, 8, 7, 7, -5.8640, 0.053018),
    (8, 8, 8, 2, -3.2119, 0.066389),
    (8, 8, 8, 4, 5.4691, 0.060029),
    (8, 8, 8, 6, -5.1946, 0.052896),
    (8, 8, 8, 8, 2.1526, 0.046043),
    (9, 7, 6, 9, 5.4146, 0.052246),
    (9, 7, 7, 8, 1.6006, 0.053125),
    (9, 8, 3, 9, -2.2623, 0.054311),
    (9, 8, 5, 9, 5.7898, 0.050462),
    (9, 8, 6, 8, 2.6715, 0.052000),
    (9, 8, 7, 7, 1.6006, 0.052867),
    (9, 8, 7, 9, -7.3423, 0.045500),
    (9, 8, 8, 6, 2.6715, 0.052744),
    (9, 8, 8, 8, -7.5531, 0.045900),
    (9, 9, 2, 9, -3.5017, 0.049433),
    (9, 9, 3, 6, 8.8502e-4, 0.056425),
    (9, 9, 3, 8, -2.2623, 0.051650),
    (9, 9, 4, 5, 1.2967e-3, 0.056883),
    (9, 9, 4, 7, -1.6468, 0.053425),
    (9, 9, 4, 9, 6.1214, 0.047245),
    (9, 9, 5, 6, -1.4030, 0.054734),
    (9, 9, 5, 8, 5.7898, 0.048927),
    (9, 9, 6, 5, -1.4030, 0.055586),
    (9, 9, 6, 9, -6.3927, 0.044000),
    (9, 9, 7, 4, -1.6468, 0.056011),
    (9, 9, 7, 6, 5.4146, 0.050996),
    (9, 9, 7, 8, -7.3423, 0.044970),
    (9, 9, 8, 3, -2.2623, 0.055954),
    (9, 9, 8, 5, 5.7898, 0.051126),
    (9, 9, 8, 7, -7.3423, 0.045400),
    (9, 9, 8, 9, 3.8083, 0.039874),
    (9, 9, 9, 2, -3.5017, 0.054558),
    (9, 9, 9, 4, 6.1214, 0.050180),
    (9, 9, 9, 6, -6.3927, 0.045081),
    (9, 9, 9, 8, 3.8083, 0.039988),
    (10, 7, 7, 10, 5.2107, 0.044976),
    (10, 8, 6, 10, 5.4385, 0.044332),
    (10, 8, 7, 9, -0.42626, 0.045380),
    (10, 8, 8, 8, -1.9896, 0.045779),
    (10, 8, 8, 10, -8.6478, 0.039673),
    (10, 9, 3, 10, -2.3165, 0.045099),
    (10, 9, 4, 9, 3.3150, 0.047113),
    (10, 9, 5, 10, 6.0930, 0.042512),
    (10, 9, 6, 9, 1.6336, 0.043878),
    (10, 9, 7, 8, -0.42626, 0.044846),
    (10, 9, 7, 10, -8.5012, 0.039123),
    (10, 9, 8, 7, -0.42626, 0.045279),
    (10, 9, 8, 9, -8.0166, 0.039760),
    (10, 9, 9, 6, 1.6336, 0.044957),
    (10, 9, 9, 8, -8.0166, 0.039874),
    (10, 9, 9, 10, 6.3437, 0.035161),
    (10, 10, 2, 10, -3.7855, 0.041300),
    (10, 10, 3, 7, 9.8451e-04, 0.046733),
    (10, 10, 3, 9, -2.3165, 0.043017),
    (10, 10, 4, 6, 1.4703e-3, 0.047276),
    (10, 10, 4, 8, -1.5874, 0.044422),
    (10, 10, 4, 10, 6.7435, 0.039798),
    (10, 10, 5, 7, -1.2642, 0.045500),
    (10, 10, 5, 7, -1.2642, 0.045500),
    (10, 10, 5, 9, 6.0930, 0.041163),
    (10, 10, 6, 6, -1.1721, 0.046259),
    (10, 10, 6, 8, 5.4385, 0.042265),
    (10, 10, 6, 10, -7.5034, 0.037564),
    (10, 10, 7, 5, -1.2642, 0.046721),
    (10, 10, 7, 7, 5.2107, 0.043067),
    (10, 10, 7, 9, -8.5012, 0.038483),
    (10, 10, 8, 4, -1.5874, 0.046923),
    (10, 10, 8, 6, 5.4385, 0.043500),
    (10, 10, 8, 8, -8.6478, 0.039085),
    (10, 10, 8, 10, 5.3952, 0.034687),
    (10, 10, 9, 3, -2.3165, 0.046823),
    (10, 10, 9, 5, 6.0930, 0.043468),
    (10, 10, 9, 7, -8.5012, 0.039269),
    (10, 10, 9, 9, 6.3437, 0.035057),
    (10, 10, 10, 2, -3.7855, 0.045724),
    (10, 10, 10, 4, 6.7435, 0.042604),
    (10, 10, 10, 6, -7.5034, 0.038860),
    (10, 10, 10, 8, 5.3952, 0.035000),
    (10, 10, 10, 10, -1.7362, 0.031318),
];
