#include "spheregreen/closed_forms.hpp"

#include <cmath>
#include <numbers>

namespace spheregreen {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

double theta(double t) { return std::acos(t); }
double log_half(double t) { return std::log((1.0 - t) / 2.0); }
double s2(double t) { return 1.0 - t * t; }
// ((1+t)/sqrt(1-t) + sqrt(1-t)) pi, shared by the half-integer L rows.
double hfac(double t) { return ((1.0 + t) / std::sqrt(1.0 - t) + std::sqrt(1.0 - t)) * kPi; }

using Fn = std::function<double(double)>;

ClosedFormRow row(int table, int n, int num, int den, std::string text, Fn f) {
  ClosedFormRow r;
  r.table = table;
  r.n = n;
  r.L_num = num;
  r.L_den = den;
  r.published_text = std::move(text);
  r.published = std::move(f);
  return r;
}

ClosedFormRow fixed(ClosedFormRow r, std::string text, Fn f, std::string why) {
  r.corrected_text = std::move(text);
  r.corrected = std::move(f);
  r.erratum = std::move(why);
  return r;
}

std::vector<ClosedFormRow> build() {
  std::vector<ClosedFormRow> v;

  // Poisson equation, a = 0.
  v.push_back(row(1, 2, 0, 1, "1 + ln((1-t)/2)", [](double t) { return 1.0 + log_half(t); }));
  v.push_back(row(1, 3, 0, 1, "-(pi-theta) t/(2 sqrt(1-t^2)) + 1/4",
                  [](double t) { return -(kPi - theta(t)) * t / (2.0 * std::sqrt(s2(t))) + 0.25; }));
  v.push_back(row(1, 4, 0, 1, "(4-7t)/(9(1-t)) + (1/3) ln((1-t)/2)",
                  [](double t) { return (4.0 - 7.0 * t) / (9.0 * (1.0 - t)) + log_half(t) / 3.0; }));
  v.push_back(fixed(
      row(1, 5, 0, 1, "(pi-theta) t(3-2t^2)/(2(1-t^2)^{3/2}) - (3-5t^2)/(16(1-t^2))",
          [](double t) {
            return (kPi - theta(t)) * t * (3.0 - 2.0 * t * t) / (2.0 * std::pow(s2(t), 1.5)) -
                   (3.0 - 5.0 * t * t) / (16.0 * s2(t));
          }),
      "-(pi-theta) t(3-2t^2)/(8(1-t^2)^{3/2}) + (3-5t^2)/(16(1-t^2))",
      [](double t) {
        return -(kPi - theta(t)) * t * (3.0 - 2.0 * t * t) / (8.0 * std::pow(s2(t), 1.5)) +
               (3.0 - 5.0 * t * t) / (16.0 * s2(t));
      },
      "angle term has factor -1/8 instead of 1/2 and the rational term has the opposite sign"));
  v.push_back(row(1, 6, 0, 1, "(23-71t+43t^2)/(75(1-t)^2) + (1/5) ln((1-t)/2)", [](double t) {
    return (23.0 - 71.0 * t + 43.0 * t * t) / (75.0 * std::pow(1.0 - t, 2)) + log_half(t) / 5.0;
  }));
  v.push_back(fixed(
      row(1, 7, 0, 1, "(pi-theta)(-15+20t^2-8t^4)/(48(1-t^2)^{5/2}) + (22-71t^2+40t^4)/(144(1-t^2)^2)",
          [](double t) {
            const double t2 = t * t;
            return (kPi - theta(t)) * (-15.0 + 20.0 * t2 - 8.0 * t2 * t2) / (48.0 * std::pow(s2(t), 2.5)) +
                   (22.0 - 71.0 * t2 + 40.0 * t2 * t2) / (144.0 * s2(t) * s2(t));
          }),
      "(pi-theta) t(-15+20t^2-8t^4)/(48(1-t^2)^{5/2}) + (22-71t^2+40t^4)/(144(1-t^2)^2)",
      [](double t) {
        const double t2 = t * t;
        return (kPi - theta(t)) * t * (-15.0 + 20.0 * t2 - 8.0 * t2 * t2) / (48.0 * std::pow(s2(t), 2.5)) +
               (22.0 - 71.0 * t2 + 40.0 * t2 * t2) / (144.0 * s2(t) * s2(t));
      },
      "angle term is missing a factor t"));
  v.push_back(row(1, 8, 0, 1, "(176-759t+906t^2-337t^3)/(735(1-t)^3) + (1/7) ln((1-t)/2)", [](double t) {
    return (176.0 - 759.0 * t + 906.0 * t * t - 337.0 * t * t * t) / (735.0 * std::pow(1.0 - t, 3)) +
           log_half(t) / 7.0;
  }));
  v.push_back(fixed(
      row(1, 9, 0, 1,
          "(pi-theta)(-35+70t^2-56t^4+16t^6)/(128(1-t^2)^{7/2}) + (50-237t^2+266t^4-94t^6)/(384(1-t^2)^3)",
          [](double t) {
            const double t2 = t * t;
            return (kPi - theta(t)) * (-35.0 + 70.0 * t2 - 56.0 * t2 * t2 + 16.0 * t2 * t2 * t2) /
                       (128.0 * std::pow(s2(t), 3.5)) +
                   (50.0 - 237.0 * t2 + 266.0 * t2 * t2 - 94.0 * t2 * t2 * t2) / (384.0 * std::pow(s2(t), 3));
          }),
      "(pi-theta) t(-35+70t^2-56t^4+16t^6)/(128(1-t^2)^{7/2}) + (50-237t^2+266t^4-94t^6)/(384(1-t^2)^3)",
      [](double t) {
        const double t2 = t * t;
        return (kPi - theta(t)) * t * (-35.0 + 70.0 * t2 - 56.0 * t2 * t2 + 16.0 * t2 * t2 * t2) /
                   (128.0 * std::pow(s2(t), 3.5)) +
               (50.0 - 237.0 * t2 + 266.0 * t2 * t2 - 94.0 * t2 * t2 * t2) / (384.0 * std::pow(s2(t), 3));
      },
      "angle term is missing a factor t"));
  v.push_back(row(1, 10, 0, 1, "(563-3089t+5466t^2-4049t^3+1091t^4)/(2835(1-t)^4) + (1/9) ln((1-t)/2)",
                  [](double t) {
                    return (563.0 - 3089.0 * t + 5466.0 * t * t - 4049.0 * std::pow(t, 3) + 1091.0 * std::pow(t, 4)) /
                               (2835.0 * std::pow(1.0 - t, 4)) +
                           log_half(t) / 9.0;
                  }));

  // Positive integer L.
  v.push_back(row(2, 2, 1, 1, "1 + (4/3)t + t ln((1-t)/2)",
                  [](double t) { return 1.0 + 4.0 / 3.0 * t + t * log_half(t); }));
  v.push_back(row(2, 2, 2, 1, "(-7+30t+41t^2)/20 - (1-3t^2)/2 ln((1-t)/2)", [](double t) {
    return (-7.0 + 30.0 * t + 41.0 * t * t) / 20.0 - (1.0 - 3.0 * t * t) / 2.0 * log_half(t);
  }));
  v.push_back(row(2, 2, 3, 1, "(-56-123t+210t^2+289t^3)/84 - t(3-5t^2)/2 ln((1-t)/2)", [](double t) {
    return (-56.0 - 123.0 * t + 210.0 * t * t + 289.0 * std::pow(t, 3)) / 84.0 -
           t * (3.0 - 5.0 * t * t) / 2.0 * log_half(t);
  }));
  v.push_back(row(2, 2, 4, 1, "(75-660t-1182t^2+1260t^3+1739t^4)/288 + (3-30t^2+35t^4)/8 ln((1-t)/2)",
                  [](double t) {
                    return (75.0 - 660.0 * t - 1182.0 * t * t + 1260.0 * std::pow(t, 3) + 1739.0 * std::pow(t, 4)) /
                               288.0 +
                           (3.0 - 30.0 * t * t + 35.0 * std::pow(t, 4)) / 8.0 * log_half(t);
                  }));
  v.push_back(row(2, 3, 1, 1, "(pi-theta)(1-2t^2)/(2 sqrt(1-t^2)) + t/4", [](double t) {
    return (kPi - theta(t)) * (1.0 - 2.0 * t * t) / (2.0 * std::sqrt(s2(t))) + t / 4.0;
  }));
  v.push_back(row(2, 3, 2, 1, "(pi-theta) t(3-4t^2)/(2 sqrt(1-t^2)) - (1-4t^2)/12", [](double t) {
    return (kPi - theta(t)) * t * (3.0 - 4.0 * t * t) / (2.0 * std::sqrt(s2(t))) - (1.0 - 4.0 * t * t) / 12.0;
  }));
  v.push_back(row(2, 3, 3, 1, "(pi-theta)(-1+8t^2-8t^4)/(2 sqrt(1-t^2)) - t(1-2t^2)/4", [](double t) {
    return (kPi - theta(t)) * (-1.0 + 8.0 * t * t - 8.0 * std::pow(t, 4)) / (2.0 * std::sqrt(s2(t))) -
           t * (1.0 - 2.0 * t * t) / 4.0;
  }));
  v.push_back(row(2, 3, 4, 1, "(pi-theta) t(-5+20t^2-16t^4)/(2 sqrt(1-t^2)) + (1-12t^2+16t^4)/20", [](double t) {
    return (kPi - theta(t)) * t * (-5.0 + 20.0 * t * t - 16.0 * std::pow(t, 4)) / (2.0 * std::sqrt(s2(t))) +
           (1.0 - 12.0 * t * t + 16.0 * std::pow(t, 4)) / 20.0;
  }));
  v.push_back(row(2, 4, 1, 1, "(10+13t-28t^2)/(15(1-t)) + t ln((1-t)/2)", [](double t) {
    return (10.0 + 13.0 * t - 28.0 * t * t) / (15.0 * (1.0 - t)) + t * log_half(t);
  }));
  v.push_back(row(2, 4, 2, 1, "(-41+223t+149t^2-359t^3)/(84(1-t)) - (1-5t^2)/2 ln((1-t)/2)", [](double t) {
    return (-41.0 + 223.0 * t + 149.0 * t * t - 359.0 * std::pow(t, 3)) / (84.0 * (1.0 - t)) -
           (1.0 - 5.0 * t * t) / 2.0 * log_half(t);
  }));
  v.push_back(row(2, 4, 3, 1, "(-96-213t+903t^2+397t^3-1027t^4)/(108(1-t)) - 5t(3-7t^2)/6 ln((1-t)/2)",
                  [](double t) {
                    return (-96.0 - 213.0 * t + 903.0 * t * t + 397.0 * std::pow(t, 3) - 1027.0 * std::pow(t, 4)) /
                               (108.0 * (1.0 - t)) -
                           5.0 * t * (3.0 - 7.0 * t * t) / 6.0 * log_half(t);
                  }));
  v.push_back(row(2, 4, 4, 1,
                  "(577-5549t-6406t^2+24886t^3+8069t^4-21929t^5)/(1056(1-t)) + 5(1-14t^2+21t^4)/8 ln((1-t)/2)",
                  [](double t) {
                    return (577.0 - 5549.0 * t - 6406.0 * t * t + 24886.0 * std::pow(t, 3) + 8069.0 * std::pow(t, 4) -
                            21929.0 * std::pow(t, 5)) /
                               (1056.0 * (1.0 - t)) +
                           5.0 * (1.0 - 14.0 * t * t + 21.0 * std::pow(t, 4)) / 8.0 * log_half(t);
                  }));
  v.push_back(row(2, 5, 1, 1, "(pi-theta)(3-12t^2+8t^4)/(8(1-t^2)^{3/2}) + t(13-16t^2)/(24(1-t^2))", [](double t) {
    return (kPi - theta(t)) * (3.0 - 12.0 * t * t + 8.0 * std::pow(t, 4)) / (8.0 * std::pow(s2(t), 1.5)) +
           t * (13.0 - 16.0 * t * t) / (24.0 * s2(t));
  }));
  v.push_back(row(2, 5, 2, 1, "(pi-theta) t(15-40t^2+24t^4)/(8(1-t^2)^{3/2}) - (3-23t^2+22t^4)/(16(1-t^2))",
                  [](double t) {
                    return (kPi - theta(t)) * t * (15.0 - 40.0 * t * t + 24.0 * std::pow(t, 4)) /
                               (8.0 * std::pow(s2(t), 1.5)) -
                           (3.0 - 23.0 * t * t + 22.0 * std::pow(t, 4)) / (16.0 * s2(t));
                  }));
  v.push_back(row(2, 5, 3, 1,
                  "(pi-theta)(-5+60t^2-120t^4+64t^6)/(8(1-t^2)^{3/2}) - t(37-144t^2+112t^4)/(40(1-t^2))",
                  [](double t) {
                    return (kPi - theta(t)) * (-5.0 + 60.0 * t * t - 120.0 * std::pow(t, 4) + 64.0 * std::pow(t, 6)) /
                               (8.0 * std::pow(s2(t), 1.5)) -
                           t * (37.0 - 144.0 * t * t + 112.0 * std::pow(t, 4)) / (40.0 * s2(t));
                  }));
  v.push_back(row(2, 5, 4, 1,
                  "(pi-theta) t(-35+210t^2-336t^4+160t^6)/(8(1-t^2)^{3/2}) + (9-159t^2+416t^4-272t^6)/(48(1-t^2))",
                  [](double t) {
                    return (kPi - theta(t)) * t *
                               (-35.0 + 210.0 * t * t - 336.0 * std::pow(t, 4) + 160.0 * std::pow(t, 6)) /
                               (8.0 * std::pow(s2(t), 1.5)) +
                           (9.0 - 159.0 * t * t + 416.0 * std::pow(t, 4) - 272.0 * std::pow(t, 6)) / (48.0 * s2(t));
                  }));
  v.push_back(row(2, 6, 1, 1, "(56+64t-359t^2+232t^3)/(105(1-t)^2) + t ln((1-t)/2)", [](double t) {
    return (56.0 + 64.0 * t - 359.0 * t * t + 232.0 * std::pow(t, 3)) / (105.0 * std::pow(1.0 - t, 2)) +
           t * log_half(t);
  }));
  v.push_back(fixed(
      row(2, 6, 2, 1, "(-103+692t+6t^2-1844t^3+1237t^4)/(180(1-t)^2) - 2(1-7t^2) ln((1-t)/2)",
          [](double t) {
            return (-103.0 + 692.0 * t + 6.0 * t * t - 1844.0 * std::pow(t, 3) + 1237.0 * std::pow(t, 4)) /
                       (180.0 * std::pow(1.0 - t, 2)) -
                   2.0 * (1.0 - 7.0 * t * t) * log_half(t);
          }),
      "(-103+692t+6t^2-1844t^3+1237t^4)/(180(1-t)^2) - (1-7t^2)/2 ln((1-t)/2)",
      [](double t) {
        return (-103.0 + 692.0 * t + 6.0 * t * t - 1844.0 * std::pow(t, 3) + 1237.0 * std::pow(t, 4)) /
                   (180.0 * std::pow(1.0 - t, 2)) -
               (1.0 - 7.0 * t * t) / 2.0 * log_half(t);
      },
      "log coefficient is (1-7t^2)/2, not 2(1-7t^2)"));
  v.push_back(row(2, 6, 3, 1,
                  "(-704-1519t+11288t^2-3342t^3-18464t^4+12697t^5)/(660(1-t)^2) - 7t(1-3t^2)/2 ln((1-t)/2)",
                  [](double t) {
                    return (-704.0 - 1519.0 * t + 11288.0 * t * t - 3342.0 * std::pow(t, 3) -
                            18464.0 * std::pow(t, 4) + 12697.0 * std::pow(t, 5)) /
                               (660.0 * std::pow(1.0 - t, 2)) -
                           7.0 * t * (1.0 - 3.0 * t * t) / 2.0 * log_half(t);
                  }));
  v.push_back(row(2, 6, 4, 1,
                  "(5477-58742t-30293t^2+384684t^3-166405t^4-450454t^5+315317t^6)/(6240(1-t)^2) + "
                  "7(1-18t^2+33t^4)/8 ln((1-t)/2)",
                  [](double t) {
                    return (5477.0 - 58742.0 * t - 30293.0 * t * t + 384684.0 * std::pow(t, 3) -
                            166405.0 * std::pow(t, 4) - 450454.0 * std::pow(t, 5) + 315317.0 * std::pow(t, 6)) /
                               (6240.0 * std::pow(1.0 - t, 2)) +
                           7.0 * (1.0 - 18.0 * t * t + 33.0 * std::pow(t, 4)) / 8.0 * log_half(t);
                  }));
  v.push_back(row(2, 7, 1, 1,
                  "(pi-theta)(5-30t^2+40t^4-16t^6)/(16(1-t^2)^{5/2}) + t(35-84t^2+46t^4)/(48(1-t^2)^2)",
                  [](double t) {
                    return (kPi - theta(t)) * (5.0 - 30.0 * t * t + 40.0 * std::pow(t, 4) - 16.0 * std::pow(t, 6)) /
                               (16.0 * std::pow(s2(t), 2.5)) +
                           t * (35.0 - 84.0 * t * t + 46.0 * std::pow(t, 4)) / (48.0 * s2(t) * s2(t));
                  }));
  v.push_back(fixed(
      row(2, 7, 2, 1,
          "(pi-theta)(35-140t^2+168t^4-64t^6)/(16(1-t^2)^{5/2}) - (62-695t^2+1304t^4-656t^6)/(240(1-t^2)^2)",
          [](double t) {
            return (kPi - theta(t)) * (35.0 - 140.0 * t * t + 168.0 * std::pow(t, 4) - 64.0 * std::pow(t, 6)) /
                       (16.0 * std::pow(s2(t), 2.5)) -
                   (62.0 - 695.0 * t * t + 1304.0 * std::pow(t, 4) - 656.0 * std::pow(t, 6)) / (240.0 * s2(t) * s2(t));
          }),
      "(pi-theta) t(35-140t^2+168t^4-64t^6)/(16(1-t^2)^{5/2}) - (62-695t^2+1304t^4-656t^6)/(240(1-t^2)^2)",
      [](double t) {
        return (kPi - theta(t)) * t * (35.0 - 140.0 * t * t + 168.0 * std::pow(t, 4) - 64.0 * std::pow(t, 6)) /
                   (16.0 * std::pow(s2(t), 2.5)) -
               (62.0 - 695.0 * t * t + 1304.0 * std::pow(t, 4) - 656.0 * std::pow(t, 6)) / (240.0 * s2(t) * s2(t));
      },
      "angle term is missing a factor t"));
  v.push_back(row(2, 7, 3, 1,
                  "(pi-theta)(-35+560t^2-1680t^4+1792t^6-640t^8)/(48(1-t^2)^{5/2}) - "
                  "t(255-1462t^2+2240t^4-1024t^6)/(144(1-t^2)^2)",
                  [](double t) {
                    return (kPi - theta(t)) *
                               (-35.0 + 560.0 * t * t - 1680.0 * std::pow(t, 4) + 1792.0 * std::pow(t, 6) -
                                640.0 * std::pow(t, 8)) /
                               (48.0 * std::pow(s2(t), 2.5)) -
                           t * (255.0 - 1462.0 * t * t + 2240.0 * std::pow(t, 4) - 1024.0 * std::pow(t, 6)) /
                               (144.0 * s2(t) * s2(t));
                  }));
  v.push_back(row(2, 7, 4, 1,
                  "(pi-theta) t(-105+840t^2-2016t^4+1920t^6-640t^8)/(16(1-t^2)^{5/2}) + "
                  "(122-2831t^2+10960t^4-14160t^6+5888t^8)/(336(1-t^2)^2)",
                  [](double t) {
                    return (kPi - theta(t)) * t *
                               (-105.0 + 840.0 * t * t - 2016.0 * std::pow(t, 4) + 1920.0 * std::pow(t, 6) -
                                640.0 * std::pow(t, 8)) /
                               (16.0 * std::pow(s2(t), 2.5)) +
                           (122.0 - 2831.0 * t * t + 10960.0 * std::pow(t, 4) - 14160.0 * std::pow(t, 6) +
                            5888.0 * std::pow(t, 8)) /
                               (336.0 * s2(t) * s2(t));
                  }));
  v.push_back(row(2, 8, 1, 1, "(144+131t-1518t^2+2013t^3-776t^4)/(315(1-t)^3) + t ln((1-t)/2)", [](double t) {
    return (144.0 + 131.0 * t - 1518.0 * t * t + 2013.0 * std::pow(t, 3) - 776.0 * std::pow(t, 4)) /
               (315.0 * std::pow(1.0 - t, 3)) +
           t * log_half(t);
  }));
  v.push_back(row(2, 8, 2, 1,
                  "(-2927+23367t-14646t^2-75134t^3+114273t^4-45021t^5)/(4620(1-t)^3) - (1-9t^2)/2 ln((1-t)/2)",
                  [](double t) {
                    return (-2927.0 + 23367.0 * t - 14646.0 * t * t - 75134.0 * std::pow(t, 3) +
                            114273.0 * std::pow(t, 4) - 45021.0 * std::pow(t, 5)) /
                               (4620.0 * std::pow(1.0 - t, 3)) -
                           (1.0 - 9.0 * t * t) / 2.0 * log_half(t);
                  }));
  v.push_back(row(2, 8, 3, 1,
                  "(-6656-13551t+155859t^2-155858t^3-250170t^4+450453t^5-180181t^6)/(5460(1-t)^3) - "
                  "3t(3-11t^2)/2 ln((1-t)/2)",
                  [](double t) {
                    return (-6656.0 - 13551.0 * t + 155859.0 * t * t - 155858.0 * std::pow(t, 3) -
                            250170.0 * std::pow(t, 4) + 450453.0 * std::pow(t, 5) - 180181.0 * std::pow(t, 6)) /
                               (5460.0 * std::pow(1.0 - t, 3)) -
                           3.0 * t * (3.0 - 11.0 * t * t) / 2.0 * log_half(t);
                  }));
  {
    auto poly = [](double t) {
      return (4173.0 - 49699.0 * t + 5793.0 * t * t + 402945.0 * std::pow(t, 3) - 485545.0 * std::pow(t, 4) -
              379929.0 * std::pow(t, 5) + 843387.0 * std::pow(t, 6) - 341189.0 * std::pow(t, 7)) /
             (3360.0 * std::pow(1.0 - t, 3));
    };
    v.push_back(fixed(
        row(2, 8, 4, 1,
            "(4173-49699t+5793t^2+402945t^3-485545t^4-379929t^5+843387t^6-341189t^7)/(3360(1-t)^3) + "
            "3(3-66t^2-143t^4)/8 ln((1-t)/2)",
            [poly](double t) {
              return poly(t) + 3.0 * (3.0 - 66.0 * t * t - 143.0 * std::pow(t, 4)) / 8.0 * log_half(t);
            }),
        "(4173-49699t+5793t^2+402945t^3-485545t^4-379929t^5+843387t^6-341189t^7)/(3360(1-t)^3) + "
        "3(3-66t^2+143t^4)/8 ln((1-t)/2)",
        [poly](double t) { return poly(t) + 3.0 * (3.0 - 66.0 * t * t + 143.0 * std::pow(t, 4)) / 8.0 * log_half(t); },
        "sign of the 143t^4 term in the log coefficient"));
  }

  // Half-integer L, positive a.
  const auto half = [&v](int table, int n, int num, std::string text, Fn f) {
    v.push_back(row(table, n, num, 2, std::move(text), std::move(f)));
  };
  half(3, 3, 1, "(1-2t)/(4 sqrt2) H", [](double t) { return (1.0 - 2.0 * t) / (4.0 * kSqrt2) * hfac(t); });
  half(3, 3, 3, "(1+2t-4t^2)/(4 sqrt2) H",
       [](double t) { return (1.0 + 2.0 * t - 4.0 * t * t) / (4.0 * kSqrt2) * hfac(t); });
  half(3, 3, 5, "(-1+4t+4t^2-8t^3)/(4 sqrt2) H", [](double t) {
    return (-1.0 + 4.0 * t + 4.0 * t * t - 8.0 * std::pow(t, 3)) / (4.0 * kSqrt2) * hfac(t);
  });
  half(3, 3, 7, "(-1-4t+12t^2+8t^3-16t^4)/(4 sqrt2) H", [](double t) {
    return (-1.0 - 4.0 * t + 12.0 * t * t + 8.0 * std::pow(t, 3) - 16.0 * std::pow(t, 4)) / (4.0 * kSqrt2) * hfac(t);
  });
  half(3, 5, 1, "(-5+18t-12t^2)/(32 sqrt2 (-1+t)) H",
       [](double t) { return (-5.0 + 18.0 * t - 12.0 * t * t) / (32.0 * kSqrt2 * (t - 1.0)) * hfac(t); });
  half(3, 5, 3, "(-7-12t+60t^2-40t^3)/(32 sqrt2 (-1+t)) H", [](double t) {
    return (-7.0 - 12.0 * t + 60.0 * t * t - 40.0 * std::pow(t, 3)) / (32.0 * kSqrt2 * (t - 1.0)) * hfac(t);
  });
  half(3, 5, 5, "(9-52t-12t^2+168t^3-112t^4)/(32 sqrt2 (-1+t)) H", [](double t) {
    return (9.0 - 52.0 * t - 12.0 * t * t + 168.0 * std::pow(t, 3) - 112.0 * std::pow(t, 4)) /
           (32.0 * kSqrt2 * (t - 1.0)) * hfac(t);
  });
  half(3, 5, 7, "(11+42t-228t^2+32t^3+432t^4-288t^5)/(32 sqrt2 (-1+t)) H", [](double t) {
    return (11.0 + 42.0 * t - 228.0 * t * t + 32.0 * std::pow(t, 3) + 432.0 * std::pow(t, 4) -
            288.0 * std::pow(t, 5)) /
           (32.0 * kSqrt2 * (t - 1.0)) * hfac(t);
  });
  {
    auto num = [](double t) { return 15.0 - 76.0 * t + 100.0 * t * t - 40.0 * std::pow(t, 3); };
    v.push_back(fixed(row(3, 7, 1, 2, "(15-76t+100t^2-40t^3)/(256 sqrt2 (1-t)^2) H",
                          [num](double t) { return num(t) / (256.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); }),
                      "(15-76t+100t^2-40t^3)/(128 sqrt2 (1-t)^2) H",
                      [num](double t) { return num(t) / (128.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); },
                      "denominator 256 should be 128"));
  }
  half(3, 7, 3, "(77+100t-1020t^2+1400t^3-560t^4)/(384 sqrt2 (1-t)^2) H", [](double t) {
    return (77.0 + 100.0 * t - 1020.0 * t * t + 1400.0 * std::pow(t, 3) - 560.0 * std::pow(t, 4)) /
           (384.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t);
  });
  half(3, 7, 5, "(-39+290t-140t^2-1120t^3+1680t^4-672t^5)/(128 sqrt2 (1-t)^2) H", [](double t) {
    return (-39.0 + 290.0 * t - 140.0 * t * t - 1120.0 * std::pow(t, 3) + 1680.0 * std::pow(t, 4) -
            672.0 * std::pow(t, 5)) /
           (128.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t);
  });
  half(3, 7, 7, "(-55-194t+1640t^2-1440t^3-3120t^4+5280t^5-2112t^6)/(128 sqrt2 (1-t)^2) H", [](double t) {
    return (-55.0 - 194.0 * t + 1640.0 * t * t - 1440.0 * std::pow(t, 3) - 3120.0 * std::pow(t, 4) +
            5280.0 * std::pow(t, 5) - 2112.0 * std::pow(t, 6)) /
           (128.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t);
  });

  // Negative a.
  const std::string theta_fix = "theta should read pi-theta";
  half(4, 3, -1, "-1/(4 sqrt2) H", [](double t) { return -1.0 / (4.0 * kSqrt2) * hfac(t); });
  v.push_back(row(4, 4, -1, 1, "-1/(3-3t)", [](double t) { return -1.0 / (3.0 - 3.0 * t); }));
  half(4, 5, -1, "(-3+2t)/(32 sqrt2 (1-t)) H",
       [](double t) { return (-3.0 + 2.0 * t) / (32.0 * kSqrt2 * (1.0 - t)) * hfac(t); });
  v.push_back(fixed(row(4, 5, -1, 1, "-t/(8(1-t^2)) - theta/(8(1-t^2)^{3/2})",
                        [](double t) { return -t / (8.0 * s2(t)) - theta(t) / (8.0 * std::pow(s2(t), 1.5)); }),
                    "-t/(8(1-t^2)) - (pi-theta)/(8(1-t^2)^{3/2})",
                    [](double t) { return -t / (8.0 * s2(t)) - (kPi - theta(t)) / (8.0 * std::pow(s2(t), 1.5)); },
                    theta_fix));
  half(4, 5, -3, "-1/(32 sqrt2 (1-t)) H", [](double t) { return -1.0 / (32.0 * kSqrt2 * (1.0 - t)) * hfac(t); });
  v.push_back(fixed(
      row(4, 5, -2, 1, "-1/(8(1-t^2)) - t theta/(8(1-t^2)^{3/2})",
          [](double t) { return -1.0 / (8.0 * s2(t)) - t * theta(t) / (8.0 * std::pow(s2(t), 1.5)); }),
      "-1/(8(1-t^2)) - t (pi-theta)/(8(1-t^2)^{3/2})",
      [](double t) { return -1.0 / (8.0 * s2(t)) - t * (kPi - theta(t)) / (8.0 * std::pow(s2(t), 1.5)); },
      theta_fix));
  v.push_back(row(4, 6, -1, 1, "(-2+t)/(15(1-t)^2)",
                  [](double t) { return (-2.0 + t) / (15.0 * std::pow(1.0 - t, 2)); }));
  v.push_back(row(4, 6, -2, 1, "-1/(15(1-t)^2)", [](double t) { return -1.0 / (15.0 * std::pow(1.0 - t, 2)); }));
  v.push_back(fixed(
      row(4, 7, -1, 2, "(-7+10t-4t^2)/(256 sqrt2 (1-t)^2) H",
          [](double t) { return (-7.0 + 10.0 * t - 4.0 * t * t) / (256.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); }),
      "(-7+10t-4t^2)/(128 sqrt2 (1-t)^2) H",
      [](double t) { return (-7.0 + 10.0 * t - 4.0 * t * t) / (128.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); },
      "denominator 256 should be 128"));
  {
    auto rat = [](double t) { return (-5.0 * t + 7.0 * std::pow(t, 3) - 2.0 * std::pow(t, 5)) / (48.0 * std::pow(s2(t), 3)); };
    v.push_back(fixed(row(4, 7, -1, 1, "(-5t+7t^3-2t^5)/(48(1-t^2)^3) - theta/(16(1-t^2)^{5/2})",
                          [rat](double t) { return rat(t) - theta(t) / (16.0 * std::pow(s2(t), 2.5)); }),
                      "(-5t+7t^3-2t^5)/(48(1-t^2)^3) - (pi-theta)/(16(1-t^2)^{5/2})",
                      [rat](double t) { return rat(t) - (kPi - theta(t)) / (16.0 * std::pow(s2(t), 2.5)); },
                      theta_fix));
  }
  v.push_back(fixed(row(4, 7, -3, 2, "(-5+2t)/(768 sqrt2 (1-t)^2) H",
                        [](double t) { return (-5.0 + 2.0 * t) / (768.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); }),
                    "(-5+2t)/(384 sqrt2 (1-t)^2) H",
                    [](double t) { return (-5.0 + 2.0 * t) / (384.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); },
                    "denominator 768 should be 384"));
  {
    auto rat = [](double t) { return (-2.0 + t * t + std::pow(t, 4)) / (48.0 * std::pow(s2(t), 3)); };
    v.push_back(fixed(row(4, 7, -2, 1, "(-2+t^2+t^4)/(48(1-t^2)^3) - t theta/(16(1-t^2)^{5/2})",
                          [rat](double t) { return rat(t) - t * theta(t) / (16.0 * std::pow(s2(t), 2.5)); }),
                      "(-2+t^2+t^4)/(48(1-t^2)^3) - t (pi-theta)/(16(1-t^2)^{5/2})",
                      [rat](double t) { return rat(t) - t * (kPi - theta(t)) / (16.0 * std::pow(s2(t), 2.5)); },
                      theta_fix));
  }
  half(4, 7, -5, "-1/(128 sqrt2 (1-t)^2) H",
       [](double t) { return -1.0 / (128.0 * kSqrt2 * std::pow(1.0 - t, 2)) * hfac(t); });
  v.push_back(fixed(
      row(4, 7, -3, 1, "-t/(16(1-t^2)^2) - (1+2t^2) theta/(48(1-t^2)^{5/2})",
          [](double t) {
            return -t / (16.0 * s2(t) * s2(t)) - (1.0 + 2.0 * t * t) * theta(t) / (48.0 * std::pow(s2(t), 2.5));
          }),
      "-t/(16(1-t^2)^2) - (1+2t^2)(pi-theta)/(48(1-t^2)^{5/2})",
      [](double t) {
        return -t / (16.0 * s2(t) * s2(t)) - (1.0 + 2.0 * t * t) * (kPi - theta(t)) / (48.0 * std::pow(s2(t), 2.5));
      },
      theta_fix));
  v.push_back(row(4, 8, -1, 1, "(-8+9t-3t^2)/(105(1-t)^3)",
                  [](double t) { return (-8.0 + 9.0 * t - 3.0 * t * t) / (105.0 * std::pow(1.0 - t, 3)); }));
  v.push_back(row(4, 8, -2, 1, "(-3+t)/(105(1-t)^3)",
                  [](double t) { return (-3.0 + t) / (105.0 * std::pow(1.0 - t, 3)); }));
  v.push_back(row(4, 8, -3, 1, "-2/(105(1-t)^3)", [](double t) { return -2.0 / (105.0 * std::pow(1.0 - t, 3)); }));
  return v;
}

}  // namespace

const std::vector<ClosedFormRow>& closed_form_registry() {
  static const std::vector<ClosedFormRow> rows = build();
  return rows;
}

const ClosedFormRow* find_closed_form(int n, double L) {
  for (const auto& r : closed_form_registry()) {
    if (r.n == n && std::abs(r.L() - L) <= 1e-9) return &r;
  }
  return nullptr;
}

}  // namespace spheregreen
