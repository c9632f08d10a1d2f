#include "oracles.hpp"

namespace poinc::testing {

std::map<int, int> clebsch_gordan_by_weights(int tj, int tl)
{
    std::map<int, int> weights;
    for (int a = -tj; a <= tj; a += 2)
        for (int b = -tl; b <= tl; b += 2)
            ++weights[a + b];

    std::map<int, int> spins;
    while (!weights.empty())
    {
        int top = weights.rbegin()->first;
        ++spins[top];
        for (int m = -top; m <= top; m += 2)
        {
            if (--weights[m] == 0)
                weights.erase(m);
        }
    }
    return spins;
}

}  // namespace poinc::testing

namespace poinc::testing {

double brute_force_simplex_sum(int resolution, double cutoff)
{
    int edge[5][5] = {};
    int n = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            edge[i][j] = edge[j][i] = n++;

    double h = cutoff / resolution;
    long long total = 1;
    for (int e = 0; e < 10; ++e)
        total *= resolution;

    double sum = 0;
    int k[10];
    double rho[10];
    for (long long code = 0; code < total; ++code)
    {
        long long c = code;
        for (int e = 9; e >= 0; --e)
        {
            k[e] = static_cast<int>(c % resolution);
            c /= resolution;
            rho[e] = (k[e] + 0.5) * h;
        }
        bool ok = true;
        for (int a = 0; a < 5 && ok; ++a)
            for (int b = a + 1; b < 5 && ok; ++b)
                for (int d = b + 1; d < 5 && ok; ++d)
                {
                    double x = rho[edge[a][b]], y = rho[edge[a][d]], z = rho[edge[b][d]];
                    double big = x > y ? (x > z ? x : z) : (y > z ? y : z);
                    ok = 2 * big >= x + y + z;
                }
        if (!ok)
            continue;
        double w = 1;
        for (double r : rho)
            w *= r;
        sum += w;
    }
    double vol = 1;
    for (int e = 0; e < 10; ++e)
        vol *= h;
    return vol * sum;
}

}  // namespace poinc::testing
