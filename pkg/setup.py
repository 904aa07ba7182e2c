from setuptools import setup, find_packages

setup(name='p3embed',
      version='0.1',
      description='Point-set embedding of plane 3-trees with triangular range queries',
      packages=find_packages(exclude=['tests']),
      zip_safe=False,
      python_requires='>=3.8',
      install_requires=[
          'aioconsole', 'drawsvg>=2.0', 'numpy'
      ],
      extras_require={
          'test': ['pytest']
      }
      )
