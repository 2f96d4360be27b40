import csv
import io
import json
import logging
import sys
from dataclasses import fields, is_dataclass
from typing import Dict, List, Optional

from .exceptions import TheCycloLabException, InvalidArgument
from cyclolab.models.annihilators import EigenSet
from cyclolab.models.cyclotomic import CycloElem, format_valuation

FORMATS = ('json', 'csv', 'text')


class CycloResult:
    """
    A class that holds the exit status, message, and report produced by a command

    Attributes
    ----------
    status_code : int
        process exit code, 0 when every check passed
    message : str
        short verdict
    data : dict
        header fields plus the list of records under "records"
    """

    def __init__(self, status_code: int, message: str, data: Dict = None):
        self.status_code = int(status_code)
        self.message = str(message)
        self.data = data if data is not None else {'records': []}

    @property
    def records(self) -> List[dict]:
        return self.data.get('records', [])


class CycloDataAdapter:
    """
    Adapter for writing cyclolab reports

    Attributes
    ----------
    output_format : str
        json, csv or text
    out : str
        output path, None for stdout
    logger : logging.Logger
        instance of logger class
    """

    def __init__(self, output_format: str = 'json', out: Optional[str] = None, logger: logging.Logger = None):
        if output_format not in FORMATS:
            raise InvalidArgument(f'unknown output format {output_format!r}')
        self.output_format = output_format
        self.out = out
        self._logger = logger or logging.getLogger(__name__)
        self._logger.setLevel(logging.DEBUG)

    def _transform_data(self, data):
        """
        Recursively turn report objects into JSON-ready structures

        Parameters
        ----------
        data : object
            record, dataclass, CycloElem, container or scalar

        Returns
        -------
        object
            dicts, lists, ints, strs, bools and None only; sets come back sorted
        """
        if hasattr(data, 'to_record'):
            return self._transform_data(data.to_record())

        elif isinstance(data, CycloElem):
            return {'p': data.p, 'a': data.a, 'coeffs': list(data.coeffs)}

        elif isinstance(data, EigenSet):
            return list(data.values)

        elif is_dataclass(data) and not isinstance(data, type):
            return {f.name: self._transform_data(getattr(data, f.name)) for f in fields(data)}

        elif isinstance(data, dict):
            return {str(key): self._transform_data(value) for key, value in data.items()}

        elif isinstance(data, (set, frozenset)):
            return [self._transform_data(item) for item in sorted(data)]

        elif isinstance(data, (list, tuple)):
            return [self._transform_data(item) for item in data]

        else:
            return data

    def build(self, header: dict, records: List, status_code: int = 0, message: str = 'ok') -> CycloResult:
        """
        Stamp every record with seed and precision and wrap them in a CycloResult

        Parameters
        ----------
        header : dict
            RunConfig.header() output
        records : list
            report objects in emission order

        Returns
        -------
        CycloResult
        """
        transformed = []
        for record in records:
            record = self._transform_data(record)
            record.setdefault('a', header.get('precision'))
            record.setdefault('seed', header.get('seed'))
            transformed.append(record)
        data = dict(self._transform_data(header), records=transformed)
        return CycloResult(status_code, message, data)

    def render(self, result: CycloResult) -> str:
        if self.output_format == 'json':
            return json.dumps(result.data, sort_keys=True, indent=2) + '\n'
        elif self.output_format == 'csv':
            return self._render_csv(result.records)
        return self._render_text(result)

    def _render_csv(self, records: List[dict]) -> str:
        columns = sorted({key for record in records for key in record})
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator='\n')
        writer.writeheader()
        for record in records:
            writer.writerow({key: _csv_cell(record.get(key)) for key in columns})
        return buffer.getvalue()

    def _render_text(self, result: CycloResult) -> str:
        lines = [f'# {key}={value}' for key, value in sorted(result.data.items()) if key != 'records']
        for record in result.records:
            lines.extend(_text_lines(record, ''))
        lines.append(f'# status={result.status_code} {result.message}')
        return '\n'.join(lines) + '\n'

    def write(self, result: CycloResult) -> str:
        """
        Render the result and write it to the configured destination

        Parameters
        ----------
        result : CycloResult
            the report

        Returns
        -------
        str
            the rendered text
        """
        text = self.render(result)
        logline = (f'format={self.output_format}, out={self.out or "stdout"}, '
                   f'records={len(result.records)}, status_code={result.status_code}')
        try:
            if self.out:
                with open(self.out, 'w', newline='') as handle:
                    handle.write(text)
            else:
                sys.stdout.write(text)
        except OSError as e:
            self._logger.error(msg=(str(e)))
            raise TheCycloLabException(f'could not write report to {self.out}') from e

        self._logger.debug(logline)
        return text


def _csv_cell(value):
    if value is None:
        return ''
    if isinstance(value, list):
        if all(not isinstance(item, (dict, list)) for item in value):
            return ';'.join(str(item) for item in value)
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    return value


def _text_lines(record: dict, indent: str) -> List[str]:
    pairs, children = [], []
    for key, value in sorted(record.items()):
        if key in ('v', 'nu') and 'cap' in record:
            pairs.append(format_valuation(value, record['cap']))
        elif isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
            children.extend((key, item) for item in value)
        else:
            pairs.extend(_text_pairs(key, value))
    lines = [indent + ' '.join(pairs)]
    for key, child in children:
        lines.extend(_text_lines(child, indent + f'  {key}: '))
    return lines


def _text_pairs(key: str, value) -> List[str]:
    """key=value fields for one record entry; nested structures get dotted keys"""
    if isinstance(value, dict):
        return [pair for name, item in sorted(value.items()) for pair in _text_pairs(f'{key}.{name}', item)]
    if isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
        return [pair for i, item in enumerate(value) for pair in _text_pairs(f'{key}.{i}', item)]
    if isinstance(value, str) and '\n' in value:
        # "# name=value" header lines become fields, data rows are joined with '/'
        pairs, rows = [], []
        for line in value.splitlines():
            line = line.strip()
            if line.startswith('#') and '=' in line:
                name, _, text = line[1:].strip().partition('=')
                pairs.append(f'{key}.{name.strip()}={_text_scalar(text.strip())}')
            elif line:
                rows.append(','.join(line.split()))
        return pairs + [f'{key}={"/".join(rows)}']
    return [f'{key}={_text_scalar(value)}']


def _text_scalar(value) -> str:
    if isinstance(value, (list, tuple)):
        return '[' + ','.join(_text_scalar(item) for item in value) + ']'
    if isinstance(value, str) and (not value or any(ch.isspace() or ch == '"' for ch in value)):
        return json.dumps(value)
    return str(value)
