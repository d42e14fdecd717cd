#include "hyperrig/forms.hpp"

#include <sstream>

namespace hyperrig {

namespace {

int binom(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

StabilizerInfo stab(int dg, int ng, std::string text)
{
    StabilizerInfo s;
    s.d_gamma = dg;
    s.n_gamma = ng;
    s.description = std::move(text);
    return s;
}

}  // namespace

bool MeasurementModel::multiaffine() const
{
    switch (kind) {
    case FormKind::inner_product:
    case FormKind::volume:
    case FormKind::product:
    case FormKind::determinant:
    case FormKind::permanent:
        return true;
    case FormKind::copies:
        return base->multiaffine();
    default:
        return false;
    }
}

bool MeasurementModel::multilinear() const
{
    if (kind == FormKind::volume) return false;
    if (kind == FormKind::copies) return base->multilinear();
    return multiaffine();
}

int MeasurementModel::degree() const
{
    switch (kind) {
    case FormKind::euclidean:
    case FormKind::pseudo_euclidean:
    case FormKind::inner_product:
        return 2;
    case FormKind::lp:
        return exponent;
    case FormKind::volume:
        return d;
    case FormKind::product:
    case FormKind::determinant:
    case FormKind::permanent:
        return k;
    case FormKind::copies:
        return base->degree();
    }
    return k;
}

MeasurementModel euclidean(int d)
{
    require(d >= 1, "euclidean: d must be positive");
    MeasurementModel m;
    m.kind = FormKind::euclidean;
    m.k = 2;
    m.d = d;
    m.stabilizer = stab(binom(d + 1, 2), d, "Euclidean group E(d)");
    m.name = "euclidean:d=" + std::to_string(d);
    return m;
}

MeasurementModel pseudo_euclidean(int d, int d_positive)
{
    require(d >= 1 && d_positive >= 0 && d_positive <= d, "pseudo_euclidean: need 0 <= d1 <= d");
    MeasurementModel m = euclidean(d);
    m.kind = FormKind::pseudo_euclidean;
    m.signature = d_positive;
    m.stabilizer->description = "pseudo-Euclidean group";
    m.name = "pseudo_euclidean:d=" + std::to_string(d) + ",d1=" + std::to_string(d_positive);
    return m;
}

MeasurementModel lp_model(int d, int p)
{
    require(d >= 1, "lp: d must be positive");
    require(p >= 2 && p % 2 == 0, "lp: exponent must be a positive even integer (got " + std::to_string(p) + ")");
    MeasurementModel m;
    m.kind = FormKind::lp;
    m.k = 2;
    m.d = d;
    m.exponent = p;
    m.stabilizer = stab(d, 1, "translations");
    m.name = "lp:d=" + std::to_string(d) + ",p=" + std::to_string(p);
    return m;
}

MeasurementModel inner_product(int d)
{
    require(d >= 1, "inner: d must be positive");
    MeasurementModel m;
    m.kind = FormKind::inner_product;
    m.k = 2;
    m.d = d;
    m.stabilizer = stab(binom(d, 2), d - 1, "orthogonal group O(d)");
    m.name = "inner:d=" + std::to_string(d);
    return m;
}

MeasurementModel volume(int d)
{
    require(d >= 1, "volume: d must be positive");
    MeasurementModel m;
    m.kind = FormKind::volume;
    m.k = d + 1;
    m.d = d;
    m.symmetry = Symmetry::antisymmetric;
    m.stabilizer = stab(d * d + d - 1, d + 1, "equi-affine group");
    m.name = "volume:d=" + std::to_string(d);
    return m;
}

MeasurementModel product_form(int k)
{
    require(k >= 2, "prod: k must be at least 2");
    MeasurementModel m;
    m.kind = FormKind::product;
    m.k = k;
    m.d = 1;
    m.stabilizer = k == 2 ? stab(0, 0, "O(1), finite") : stab(0, 0, "finite");
    if (k >= 3) {
        m.stabilizer->d_gamma_partite = k - 1;
        m.stabilizer->n_gamma_partite = 1;
    }
    m.name = "prod:k=" + std::to_string(k);
    return m;
}

MeasurementModel determinant_form(int k)
{
    require(k >= 2, "det: k must be at least 2");
    MeasurementModel m;
    m.kind = FormKind::determinant;
    m.k = k;
    m.d = k;
    m.symmetry = Symmetry::antisymmetric;
    m.stabilizer = stab(k * k - 1, k, "special linear group SL(k)");
    m.name = "det:k=" + std::to_string(k);
    return m;
}

MeasurementModel permanent_form(int k)
{
    require(k >= 2, "perm: k must be at least 2");
    MeasurementModel m;
    m.kind = FormKind::permanent;
    m.k = k;
    m.d = k;
    m.name = "perm:k=" + std::to_string(k);
    return m;
}

MeasurementModel sum_of_copies(const MeasurementModel& h, int t)
{
    require(t >= 1, "sum_of_copies: t must be positive");
    MeasurementModel m;
    m.kind = FormKind::copies;
    m.k = h.k;
    m.d = h.d * t;
    m.symmetry = h.symmetry;
    m.base = std::make_shared<const MeasurementModel>(h);
    m.copies = t;
    m.name = "copies(" + h.name + ",t=" + std::to_string(t) + ")";
    switch (h.kind) {
    case FormKind::product:
        if (h.k == 2) {
            m.stabilizer = stab(binom(t, 2), t - 1, "orthogonal group O(d)");
        } else {
            m.stabilizer = stab(0, 0, "finite (permutations and scalings)");
            m.stabilizer->d_gamma_partite = t * (h.k - 1);
            m.stabilizer->n_gamma_partite = 1;
        }
        break;
    case FormKind::determinant:
        m.stabilizer = stab(t * (h.k * h.k - 1), h.k, "product of SL(k) copies");
        break;
    case FormKind::euclidean:
        m.stabilizer = euclidean(m.d).stabilizer;
        break;
    case FormKind::lp:
        m.stabilizer = lp_model(m.d, h.exponent).stabilizer;
        break;
    case FormKind::inner_product:
        m.stabilizer = inner_product(m.d).stabilizer;
        break;
    default:
        if (t == 1) m.stabilizer = h.stabilizer;
        break;
    }
    return m;
}

MeasurementModel sym_tensor(int d, int k)
{
    require(d >= 1, "sym_tensor: d must be positive");
    MeasurementModel m = sum_of_copies(product_form(k), d);
    m.name = "sym_tensor:d=" + std::to_string(d) + ",k=" + std::to_string(k);
    return m;
}

MeasurementModel skew_tensor(int r, int k)
{
    require(r >= 1, "skew_tensor: r must be positive");
    MeasurementModel m = sum_of_copies(determinant_form(k), r);
    m.name = "skew_tensor:r=" + std::to_string(r) + ",k=" + std::to_string(k);
    return m;
}

MeasurementModel chow(int r, int k)
{
    require(r >= 1, "chow: r must be positive");
    MeasurementModel m = sum_of_copies(permanent_form(k), r);
    m.stabilizer.reset();
    m.name = "chow:r=" + std::to_string(r) + ",k=" + std::to_string(k);
    return m;
}

MeasurementModel with_stabilizer(MeasurementModel m, const StabilizerInfo& info)
{
    m.stabilizer = info;
    return m;
}

MeasurementModel builtin_model(const std::string& name, const ModelParams& p)
{
    auto need = [&](const std::optional<int>& v, const char* key) {
        require(v.has_value(), "model " + name + " requires parameter " + key);
        return *v;
    };
    if (name == "euclidean") return euclidean(need(p.d, "d"));
    if (name == "pseudo_euclidean") return pseudo_euclidean(need(p.d, "d"), need(p.d1, "d1"));
    if (name == "lp") return lp_model(need(p.d, "d"), need(p.p, "p"));
    if (name == "inner" || name == "inner_product") return inner_product(need(p.d, "d"));
    if (name == "volume") return volume(need(p.d, "d"));
    if (name == "sym_tensor") return sym_tensor(need(p.d, "d"), need(p.k, "k"));
    if (name == "skew_tensor") return skew_tensor(need(p.r, "r"), need(p.k, "k"));
    if (name == "chow") return chow(need(p.r, "r"), need(p.k, "k"));
    if (name == "prod") return product_form(need(p.k, "k"));
    if (name == "det") return determinant_form(need(p.k, "k"));
    if (name == "perm") return permanent_form(need(p.k, "k"));
    throw InputError("unknown model: " + name);
}

MeasurementModel parse_model(const std::string& descriptor)
{
    auto colon = descriptor.find(':');
    std::string name = descriptor.substr(0, colon);
    ModelParams p;
    if (colon != std::string::npos) {
        std::stringstream ss(descriptor.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            require(eq != std::string::npos, "malformed model parameter: " + item);
            std::string key = item.substr(0, eq);
            int value = 0;
            try {
                std::size_t used = 0;
                value = std::stoi(item.substr(eq + 1), &used);
                require(used == item.size() - eq - 1, "malformed model parameter: " + item);
            } catch (const std::logic_error&) {
                throw InputError("malformed model parameter: " + item);
            }
            if (key == "d") p.d = value;
            else if (key == "k") p.k = value;
            else if (key == "p") p.p = value;
            else if (key == "r") p.r = value;
            else if (key == "d1") p.d1 = value;
            else throw InputError("unknown model parameter: " + key);
        }
    }
    return builtin_model(name, p);
}

}  // namespace hyperrig
