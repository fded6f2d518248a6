"""
logint CLI / 관리 명령 테스트.

call_command 로 명령 출력을, apps.cli.run 으로 종료 코드와 ERROR:<code>: 줄을 확인한다.
기대값: li(1000) = 177.609657990..., π(10^6) = 78498, Ei(-1) = -0.2193839344
"""
import csv
import io

import pytest
from django.core.management import call_command

from apps.cli import run
from apps.management.commands.pi import Command as PiCommand
from apps.service import primes, sieve_cache
from apps.service.golden import golden_path_for


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def perturbed_comparativa(tmp_path):
    text = golden_path_for('comparativa').read_text(encoding='utf-8')
    path = tmp_path / 'comparativa.csv'
    path.write_text(text.replace('1000,168,145,172,177', '1000,168,145,172,187'), encoding='utf-8')
    return path


# ── 값 출력 ────────────────────────────────────────────
class TestValues:
    def test_li_call_command(self):
        out = io.StringIO()
        call_command('li', '1000', '--digits', '9', stdout=out)
        assert out.getvalue().strip() == '177.609657990'

    def test_li_from2_and_mu_quadrature(self):
        _, series, _ = invoke('li', '1000', '--digits', '9', '--convention', 'from2')
        _, quadrature, _ = invoke('li', '1000', '--digits', '9', '--convention', 'from2', '--method', 'mu-quadrature')
        assert series.strip() == quadrature.strip()
        assert series.startswith('176.5644')

    def test_pi(self):
        code, out, err = invoke('pi', '1000000')
        assert code == 0
        assert out.strip() == '78498'
        assert err == ''

    def test_pi_bessel_convention(self):
        assert invoke('pi', '1e5', '--convention', 'bessel1810')[1].strip() == '9593'

    def test_negative_ei_argument(self):
        code, out, _ = invoke('ei', '-1')
        assert code == 0
        assert out.strip() == '-0.2193839344'

    def test_approx_legendre(self):
        assert invoke('approx', 'legendre', '1e6', '--digits', '0')[1].strip() == '78543'

    def test_approx_riemann_r(self):
        code, out, _ = invoke('approx', 'riemann_r', '10^6', '--nmax', '20', '--digits', '1')
        assert code == 0
        assert out.strip() == '78527.4'

    def test_blocks(self):
        code, out, _ = invoke('blocks', '10000', '1000')
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == 'lo,hi,count'
        assert lines[1] == '0,1000,168'
        assert len(lines) == 11

    def test_hyphenated_subcommand(self):
        code, out, _ = invoke('fit-legendre', '--lo', '1e5', '--hi', '1e6', '--samples', '1')
        assert code == 0
        assert out.strip().startswith('1.087')

    def test_quad_custom_interval(self):
        code, out, _ = invoke('quad', '--from', '100', '--to', '110', '--nodes', '5', '--panels', '1')
        [row] = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert (row['a'], row['b'], row['nodes'], row['panels']) == ('100.0', '110.0', '5', '1')
        assert abs(float(row['value']) - 2.1489028) < 1e-6
        assert float(row['abs_error']) < 1e-6

    def test_quad_default_is_gauss_demo(self):
        code, out, _ = invoke('quad', '--nodes', '10')
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [r['nodes'] for r in rows] == ['10']
        assert abs(float(rows[0]['reference']) - 8406.243118) < 1e-3

    @pytest.mark.parametrize('argv, expected', [
        (['--from', '100'], 3),
        (['--from', '0.5', '--to', '2'], 1),
    ])
    def test_quad_interval_errors(self, argv, expected):
        code, _, err = invoke('quad', *argv)
        assert code == expected
        assert err.startswith('ERROR:')

    def test_complex_demo(self):
        code, out, _ = invoke('complex-demo', '--pairs', '2')
        rows = {row['check']: row for row in csv.DictReader(io.StringIO(out))}
        assert code == 0
        assert 'homotopic-pairs(2)' in rows
        assert {'winding-1', 'winding-2', 'winding-3', 'art18-ci(x=1)'} <= set(rows)


# ── 표 / 검증 ──────────────────────────────────────────
class TestTablesAndVerify:
    def test_table_comparativa_verify(self):
        code, out, _ = invoke('table', 'comparativa', '--verify')
        assert code == 0
        assert '1000,168,145,172,177' in out
        assert '[OK] comparativa 골든 검증 통과' in out

    def test_table_soldner_markdown(self):
        code, out, _ = invoke('table', 'soldner', '--x-max', '5', '--format', 'md', '--digits', '6')
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == '| x | li | error_estimate |'
        assert len(lines) == 2 + 4

    def test_verify_perturbed_file(self, tmp_path):
        code, out, err = invoke('verify', 'comparativa', '--golden', str(perturbed_comparativa(tmp_path)))
        assert code == 2
        assert 'FAIL comparativa n=1000 li' in out
        assert err.startswith('ERROR:mismatch:')

    def test_verify_shipped_files(self):
        code, out, _ = invoke('verify')
        assert code == 0
        assert 'PASS bessel1810' in out and 'PASS comparativa' in out and 'PASS constants' in out

    def test_golden_needs_single_table(self, tmp_path):
        code, _, err = invoke('verify', '--golden', str(tmp_path / 'x.csv'))
        assert code == 3
        assert err.startswith('ERROR:usage:')

    def test_malformed_golden_cell(self, tmp_path):
        text = golden_path_for('comparativa').read_text(encoding='utf-8')
        path = tmp_path / 'comparativa.csv'
        path.write_text(text.replace('1000,168,145', '1000,abc,145'), encoding='utf-8')
        code, _, err = invoke('verify', 'comparativa', '--golden', str(path))
        assert code == 1
        assert err.startswith('ERROR:golden:')
        assert 'abc' in err


# ── 오류 / 종료 코드 ───────────────────────────────────
class TestExitCodes:
    def test_domain_error(self):
        code, out, err = invoke('pi', '1')
        assert code == 1
        assert out == ''
        assert err.startswith('ERROR:domain:')

    def test_pole_error(self):
        code, _, err = invoke('li', '1')
        assert code == 1
        assert err.startswith('ERROR:')

    @pytest.mark.parametrize('argv', [['li', 'abc'], ['frobnicate', '1'], [], ['li']])
    def test_usage_errors(self, argv):
        code, _, err = invoke(*argv)
        assert code == 3
        assert err.startswith('ERROR:usage:')

    def test_help(self):
        code, out, _ = invoke('--help')
        assert code == 0
        assert 'fit-legendre' in out

    def test_run_from_argv_exits(self):
        with pytest.raises(SystemExit) as excinfo:
            PiCommand(stdout=io.StringIO(), stderr=io.StringIO()).run_from_argv(['manage.py', 'pi', '1'])
        assert excinfo.value.code == 1


# ── 출력 옵션 ──────────────────────────────────────────
class TestOutputOptions:
    def test_out_file(self, tmp_path):
        target = tmp_path / 'nested' / 'pi.txt'
        code, out, _ = invoke('pi', '1000', '--out', str(target))
        assert code == 0
        assert target.read_text(encoding='utf-8').strip() == '168'
        assert '[OK]' in out

    def test_deterministic(self):
        first = invoke('table', 'bessel1810', '--digits', '6')
        second = invoke('table', 'bessel1810', '--digits', '6')
        assert first == second

    def test_digits_clamped(self, caplog):
        with caplog.at_level('WARNING', logger='apps.service.realnum'):
            code, out, _ = invoke('li', '1000', '--digits', '80')
        assert code == 0
        assert any('제한' in r.message for r in caplog.records)
        assert len(out.strip().split('.')[1]) < 80

    def test_constants_digits_follow_precision(self, caplog):
        with caplog.at_level('WARNING'):
            code, out, _ = invoke('constants', '--digits', '45', '--precision', '40')
        computed = {r['constant']: r['value'] for r in csv.DictReader(io.StringIO(out)) if r['source'] == 'computed'}
        assert code == 0
        assert len(computed['gamma'].split('.')[1]) == 32
        assert len(computed['mu'].split('.')[1]) == 32
        assert any('제한' in r.message for r in caplog.records)

    def test_constants_mu_cap_clamps(self, caplog):
        with caplog.at_level('WARNING', logger='apps.management.commands.constants'):
            code, out, err = invoke('constants', '--digits', '70', '--precision', '100')
        computed = {r['constant']: r['value'] for r in csv.DictReader(io.StringIO(out)) if r['source'] == 'computed'}
        assert code == 0
        assert err == ''
        assert len(computed['gamma'].split('.')[1]) == 70
        assert len(computed['mu'].split('.')[1]) == 50
        assert any('mu' in r.message and '제한' in r.message for r in caplog.records)


# ── 체 캐시 옵션 ───────────────────────────────────────
class TestSieveCacheOption:
    @pytest.fixture(autouse=True)
    def _fresh_caches(self):
        sieve_cache.clear_memory_cache()
        primes._modern_pi.cache_clear()
        yield
        sieve_cache.clear_memory_cache()
        primes._modern_pi.cache_clear()

    def test_pi_reads_cache_written_by_blocks(self, tmp_path, monkeypatch):
        path = tmp_path / 'sieve.bin'
        assert invoke('blocks', '1000000', '10000', '--sieve-cache', str(path))[0] == 0
        assert path.exists()
        sieve_cache.clear_memory_cache()

        monkeypatch.setattr(primes, '_map_segments', lambda *a, **k: pytest.fail('캐시가 있으면 체질하지 않아야 함'))
        code, out, _ = invoke('pi', '1000000', '--sieve-cache', str(path))
        assert code == 0
        assert out.strip() == '78498'
        assert primes._sieve_config()['CACHE_PATH'] != str(path)

    @pytest.mark.parametrize('argv', [
        ['table', 'comparativa'],
        ['approx', 'legendre', '1e6', '--digits', '0'],
    ])
    def test_option_accepted_everywhere(self, tmp_path, argv):
        code, _, err = invoke(*argv, '--sieve-cache', str(tmp_path / 'sieve.bin'))
        assert code == 0
        assert err == ''

