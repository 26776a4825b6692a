import json

class Writer:
    pass

class StringWriter(Writer):
    def __init__(self):
        self.out = []

    def write(self, content):
        self.out.append(content)

    def finalize(self):
        return '\n'.join(self.out) + '\n'

class FileWriter(Writer):
    def __init__(self, file):
        self.out = file

    def write(self, content):
        self.out.write(content + '\n')

    def finalize(self):
        return None

def to_json_line(record):
    return json.dumps(record, sort_keys=True, separators=(',', ':'))

### Report emitter for the CLI formats (json lines | tsv | text)
class ReportWriter:
    def __init__(self, writer, format='json'):
        assert isinstance(writer, Writer)
        assert format in ('json', 'tsv', 'text')
        self.writer = writer
        self.format = format
        self.columns = None

    def header(self, config):
        if self.format == 'json':
            self.writer.write(to_json_line({'config': config}))
        else:
            self.writer.write('# ' + to_json_line(config))

    def record(self, record):
        if self.format == 'json':
            self.writer.write(to_json_line(record))
        elif self.format == 'tsv':
            if self.columns is None:
                self.columns = list(record.keys())
                self.writer.write('\t'.join(self.columns))
            self.writer.write('\t'.join(str(record.get(c, '')) for c in self.columns))
        else:
            self.writer.write(' '.join('{}={}'.format(k, v) for k, v in record.items()))

    def value(self, value):
        self.writer.write(str(value))

    ### A single named result: the bare value in text format
    def scalar(self, name, value):
        if self.format == 'text':
            self.value(value)
        else:
            self.record({name: value})

    def finalize(self):
        return self.writer.finalize()
