import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
means = cars.groupby("origin")["mpg"].mean()
fig, ax = plt.subplots()
ax.bar(means.index, means.values)
ax.set_xlabel("origin")
ax.set_ylabel("mean mpg")
plt.show()
