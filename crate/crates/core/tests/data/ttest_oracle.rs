// Frozen reference values from an independent implementation
// (scipy.stats.ttest_rel and scipy.stats.t.cdf). Do not edit by hand.

const CASES: &[(&[f64], &[f64], f64, f64)] = &[
    (&[81.2184, 75.6754], &[74.6639, 76.5099], 0.774123697388008, 0.5806188558715906),
    (&[70.8392, 80.0315, 66.6562, 75.9811, 74.2528], &[69.2144, 80.2077, 68.7452, 77.2083, 74.7858], -0.7751701616827443, 0.48151420778872256),
    (&[82.3142, 75.8289, 85.3, 75.7513, 64.7471, 64.6047, 77.6457, 74.5629, 64.9233, 68.5555], &[76.8475, 68.3592, 80.5048, 72.8379, 61.393, 62.1792, 75.4225, 71.296, 62.2835, 58.9956], 5.712969112921754, 0.0002895172047629302),
    (&[81.5194, 63.564, 75.1682, 84.2369, 70.7539, 73.9721, 71.4433, 79.1374, 84.7545, 72.3361, 62.4114, 76.0701, 74.7365, 90.545, 80.1657, 66.5766, 75.2351, 63.8706, 69.6153, 78.9755, 73.5784, 73.4889, 72.543, 77.804, 64.6084, 58.8749, 80.1379, 84.8066, 72.4338, 75.0466], &[85.0439, 66.6655, 77.2927, 85.8426, 66.6293, 72.8109, 73.8902, 80.8731, 83.6904, 77.2056, 62.7537, 77.0586, 78.0539, 94.2015, 82.5534, 69.1613, 78.7815, 68.921, 67.2436, 79.5014, 76.5221, 77.2036, 72.1365, 75.8875, 70.6664, 61.5736, 79.7184, 88.1685, 74.9408, 71.93], -3.5307073966866827, 0.0014060963032142923),
    (&[63.0001, 82.3726], &[63.1832, 78.9963], 0.8971174917120884, 0.5344907173570985),
    (&[80.0518, 82.0858, 61.9652, 63.7348, 82.9289], &[83.2287, 86.2816, 64.1875, 62.0719, 81.511], -1.0833559224841698, 0.33958774969298),
    (&[69.6458, 69.3625, 57.3916, 75.4801, 67.0305, 63.5635, 81.7167, 83.6194, 72.1911, 82.4595], &[66.2493, 70.6349, 61.9701, 75.8794, 67.606, 65.9681, 82.5771, 81.249, 77.0964, 80.1284], -0.7739796096655196, 0.45879054436776856),
    (&[69.7471, 72.4782, 68.9772, 70.6238, 91.6096, 81.0226, 81.2953, 83.6633, 70.483, 65.5034, 68.9103, 83.7373, 76.2995, 65.5857, 83.7972, 81.1344, 47.5795, 84.6197, 85.0157, 84.6123, 66.4264, 76.3168, 76.4809, 74.5494, 76.7412, 81.5946, 74.3381, 78.4611, 60.9856, 75.124], &[70.3498, 69.6218, 61.0456, 66.2996, 84.9522, 77.1407, 77.6019, 77.0581, 65.4347, 63.7457, 63.309, 78.7752, 65.0898, 65.7295, 76.9246, 78.4513, 38.9184, 77.144, 77.0553, 79.1462, 59.6324, 69.401, 72.3656, 66.8425, 68.9146, 79.2171, 68.7627, 74.3948, 59.2918, 69.4654], 10.610290530584354, 1.6925740824384445e-11),
    (&[77.8748, 69.5507], &[79.9, 74.2902], -2.492244777659085, 0.2429206920540606),
    (&[74.4604, 76.0309, 65.0107, 73.4355, 77.5208], &[76.69, 77.981, 65.9473, 70.6989, 79.1057], -0.8727513474560454, 0.43205830913527676),
    (&[58.8824, 86.9548, 78.8579, 84.5477, 72.005, 69.4055, 75.6874, 66.5937, 74.7561, 60.6246], &[60.4764, 85.8039, 76.8, 86.5795, 71.9249, 74.9423, 74.3833, 64.0156, 76.2909, 58.6422], -0.19351640293777256, 0.8508515162839758),
    (&[91.6112, 71.3995, 87.5501, 67.9688, 88.458, 81.488, 80.6927, 85.6384, 75.4698, 78.8285, 62.3704, 78.1286, 76.9664, 78.0864, 86.0306, 67.7648, 75.2383, 64.4694, 57.4239, 84.289, 70.9522, 70.0454, 76.8023, 59.2262, 70.7196, 70.5218, 67.8673, 72.873, 74.8417, 62.569], &[88.0014, 72.7629, 84.975, 67.8812, 88.7999, 80.2399, 83.7879, 78.8918, 75.8744, 77.2255, 62.1848, 75.2201, 77.8834, 75.7248, 84.2059, 63.2413, 70.7889, 61.6939, 60.4515, 80.0511, 72.0315, 64.9456, 79.4919, 53.0094, 74.3741, 64.9885, 66.3109, 71.1003, 70.6178, 61.5655], 3.050142215961657, 0.004850541501772015),
    (&[75.857, 66.8602], &[79.599, 63.5492], -0.061108748050474504, 0.9611452794485313),
    (&[76.5829, 67.535, 79.8049, 73.9886, 70.6708], &[86.5631, 67.7339, 84.5878, 75.1237, 72.0903], -1.951456508222927, 0.122751808807211),
    (&[81.4216, 61.4191, 76.8049, 80.593, 72.199, 68.826, 80.973, 67.2679, 77.4458, 73.1501], &[79.7057, 50.3034, 78.836, 84.298, 78.6412, 71.7458, 81.5511, 63.3644, 74.2883, 72.8145], 0.2925031759939685, 0.7765331849010586),
    (&[69.4304, 74.1945, 62.2191, 66.7449, 61.7006, 74.1483, 83.3241, 70.6974, 81.7626, 75.406, 64.4072, 76.1275, 78.2582, 75.5369, 57.8527, 71.435, 78.4082, 79.4368, 77.9621, 75.7921, 87.2683, 72.3607, 72.2013, 79.8766, 71.3988, 92.9688, 71.6023, 70.8725, 69.3103, 73.6836], &[65.9679, 71.5571, 56.437, 64.2532, 62.5465, 74.6366, 79.0223, 73.7944, 85.1103, 72.1075, 69.3292, 79.3533, 78.7444, 75.4748, 57.9774, 73.2562, 76.1327, 78.6658, 77.6349, 76.7664, 86.9668, 78.5928, 71.8182, 80.3873, 72.5422, 91.3566, 70.2906, 72.4393, 71.0918, 71.6409], 0.033514286379982744, 0.9734940872294156),
    (&[73.4661, 76.8205], &[82.9024, 71.8463], -0.3096422747302319, 0.8088362762137044),
    (&[71.0619, 82.4458, 86.6573, 79.4458, 64.8534], &[66.4261, 78.6159, 85.2281, 79.2052, 58.5068], 2.996331684261229, 0.040086758266224466),
    (&[75.1858, 81.2268, 89.1881, 69.432, 67.0815, 87.3771, 87.3937, 69.8191, 59.5081, 82.3498], &[77.6285, 79.5132, 90.3962, 73.649, 66.6579, 89.7148, 89.9872, 72.1293, 62.2897, 92.4995], -2.597425454189382, 0.028859833178069703),
    (&[83.2371, 79.2642, 58.3214, 81.9847, 78.1578, 70.5167, 79.1462, 68.4366, 74.176, 79.9231, 71.8069, 93.2892, 66.2908, 73.6071, 75.7718, 70.49, 80.638, 62.9355, 69.6185, 81.5821, 80.1238, 72.2705, 66.7987, 69.5649, 82.363, 72.4188, 74.2473, 79.7512, 74.7734, 84.9221], &[87.6825, 75.1297, 59.4666, 84.0396, 80.7895, 67.9479, 78.0752, 72.2546, 73.0727, 78.7371, 67.4244, 96.6525, 68.0938, 75.0997, 78.7174, 71.632, 80.0784, 63.8075, 71.7256, 87.4165, 77.3699, 69.6116, 63.1041, 66.3685, 83.2195, 73.9498, 73.1958, 80.5699, 78.5276, 82.5817], -0.6579843407716572, 0.515737838119092),
    (&[73.0452, 80.1489], &[70.4834, 74.4456], 2.630940633455346, 0.2312378524546555),
    (&[71.051, 74.4099, 83.263, 60.0776, 90.1738], &[71.0249, 67.6328, 82.4398, 58.6918, 86.6073], 2.0678190442745175, 0.10749545167094256),
    (&[62.3297, 91.4575, 71.7521, 63.2513, 82.4603, 63.4679, 72.2624, 80.9308, 67.9016, 84.406], &[61.1273, 89.1795, 68.2232, 57.4361, 77.1365, 58.6153, 68.7742, 80.6879, 64.0426, 87.5704], 3.185759570112736, 0.011081777833960743),
    (&[71.6047, 77.8354, 67.2641, 72.6611, 83.533, 71.2038, 73.2587, 71.728, 66.2615, 60.9084, 62.4936, 74.6081, 59.5602, 69.6661, 70.0426, 74.778, 67.4408, 72.1492, 82.5375, 75.019, 73.9614, 74.4238, 77.17, 72.7097, 81.3972, 82.2623, 73.6106, 80.1127, 62.3555, 87.8297], &[72.0167, 75.2733, 71.2197, 68.6121, 89.3172, 74.8389, 73.9248, 77.0291, 68.1834, 63.856, 67.1436, 78.5073, 60.0993, 71.7939, 72.8608, 71.6721, 70.8798, 74.1875, 83.2463, 79.9076, 79.9503, 80.5003, 75.1364, 78.4299, 87.849, 88.2907, 74.9051, 79.0085, 65.8339, 94.3659], -4.727983381218647, 5.4001379648897416e-05),
    (&[68.3236, 75.4153], &[65.3681, 80.3018], -0.24623820453965795, 0.8462976874328445),
];
const CDF_TABLE: &[(f64, f64, f64)] = &[
    (-6.0, 1.0, 0.052568456711253424),
    (-3.5, 1.0, 0.08858553278290474),
    (-2.0, 1.0, 0.1475836176504332),
    (-1.2, 1.0, 0.22114206162369543),
    (-0.5, 1.0, 0.3524163823495668),
    (0.0, 1.0, 0.5),
    (0.4, 1.0, 0.6211189415908434),
    (1.0, 1.0, 0.7500000000000002),
    (2.5, 1.0, 0.8788810584091566),
    (4.0, 1.0, 0.9220208696226307),
    (7.5, 1.0, 0.9578075368411587),
    (12.0, 1.0, 0.9735353239404101),
    (0.05, 1.0, 0.5159022512561764),
    (-6.0, 4.0, 0.001941268523480256),
    (-3.5, 4.0, 0.012448081730111376),
    (-2.0, 4.0, 0.05805826175840775),
    (-1.2, 4.0, 0.1481756966561767),
    (-0.5, 4.0, 0.32166498159093165),
    (0.0, 4.0, 0.5),
    (0.4, 4.0, 0.6452013692850016),
    (1.0, 4.0, 0.8130495168499705),
    (2.5, 4.0, 0.966616727594006),
    (4.0, 4.0, 0.9919349550499538),
    (7.5, 4.0, 0.9991545642338389),
    (12.0, 4.0, 0.9998617857257486),
    (-6.0, 9.0, 0.0001012496610338204),
    (-3.5, 9.0, 0.003361757881529476),
    (-2.0, 9.0, 0.03827641188535047),
    (-1.2, 9.0, 0.13038659869523078),
    (-0.5, 9.0, 0.3145356499130132),
    (0.0, 9.0, 0.5),
    (0.4, 9.0, 0.6507579541643174),
    (1.0, 9.0, 0.8282818019310432),
    (2.5, 9.0, 0.9830690861585071),
    (4.0, 9.0, 0.9984447858448071),
    (7.5, 9.0, 0.9999815362936917),
    (12.0, 9.0, 0.9999996150056888),
    (-6.0, 29.0, 7.963954213087339e-07),
    (-3.5, 29.0, 0.0007622231573273019),
    (-2.0, 29.0, 0.027471818591483593),
    (-1.2, 29.0, 0.11992556363231266),
    (-0.5, 29.0, 0.3104240420968907),
    (0.0, 29.0, 0.5),
    (0.4, 29.0, 0.6539561364111421),
    (1.0, 29.0, 0.8372090059919032),
    (2.5, 29.0, 0.9908373278307869),
    (4.0, 29.0, 0.9997999680271737),
    (7.5, 29.0, 0.9999999855790542),
    (12.0, 29.0, 0.999999999999547),
    (0.05, 29.0, 0.5197674083692665),
];
